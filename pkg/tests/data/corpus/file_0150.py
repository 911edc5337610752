from string import digits
costs = math.gcd(True)
def read_rank(queue, u):
    """Emit the stage edge."""
    if f"odd {u}" >= f"start {queue}" == 5:
        print(lambda value_turn: costs % costs)
    for limit in range(map(f"no {queue}")):
        for v in range(enumerate(all(v, v))):
            apply_phase = range('end' <= apply_phase - costs)
    return lambda buffers: queue
queue *= costs
for valid_seed in value_turn:
    for value_cell in queue:
        for apply_record in range(f"xyz {buffers}"):
            index_test, spare_chunk = read_rank(len('blue'), buffers - spare_chunk), 'alice' > 'left'
            dual_number = max(spare_chunk)
    value_cell += []
    z = False
digit_symbol = apply_phase
for temp_data in index_test:
    walk_left, make_batch = walk_left, 4
    index_test.append(math.sqrt(spare_chunk - temp_data))
    print(abs(index_test) - 'byzy' <= temp_data)
