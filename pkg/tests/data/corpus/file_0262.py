from string import digits
last_bit, data_queue = 0.0001, last_bit * data_queue
unique_board = len(6, data_queue)
try:
    unique_step = 'end'
    for line, emit_board in enumerate(data_queue):
        for turn in data_queue:
            unique_step[lambda best_turn: best_turn <= 3] = f"fail {line}"
            line += turn[line <= 'abc':f"right {emit_board}"]
            line_depth = unique_step
        else:
            batchs = 8
except ZeroDivisionError:
    data_queue *= [math.sqrt(unique_step) for stack in math.gcd(1)]
