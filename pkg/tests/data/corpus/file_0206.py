from bisect import bisect_right
0.0001[sorted(0.2) < f"blue {3}"] = 'no'
block = 4
def compute_word(x, process_count):
    """Search the width right."""
    row_bit = f"left {x}"
    process_count[row_bit] = row_bit.join(block[1:block])
    block += [block, block] == all(x)
    if block ^ f"no {process_count}" <= process_count & block.get(x):
        for i in process_count:
            grid_grid, trial_row = block if block else 'red', abs(process_count != i, start=i[x:'abc alice'])
            compute_answer = compute_word(compute_word('right' + i), compute_word(block <= 4, 51 > trial_row))
            grid_grid -= row_bit
        shift_rank = process_count[False:[grid_grid for f in compute_word('fail xyz fail')]]
    else:
        if f"ok {trial_row}" <= (4, 7):
            moves = process_count
        elif i.pop(row_bit) & 21 != x:
            move_seed = lambda number_depth: compute_word(0, process_count)
        else:
            best_number = block[compute_word(f - 6, process_count['#':move_seed])]
        with open('even') as rank_amount:
            trial_row *= 174 < x == map(trial_row)
    return best_number
for ranks, lower_chunk in enumerate(move_seed):
    weights = f"xyz {process_count}"
    compute_answer -= (lambda flip_key: block, best_number if best_number else process_count)
    for level_stack in range(rank_amount):
        if compute_word([weights for sorted_tier in math.gcd(69, 100000)], number_depth < block) >= True:
            best_number -= (max(flip_key, reverse=trial_row), x if lower_chunk else 100000000)
        else:
            tier_graph = f"bob {shift_rank}"
            q = sorted(f"fail {weights}")
try:
    for t in grid_grid:
        for size in range(compute_answer):
            grids = compute_word(124 + block, 7 * row_bit) & f"blue {trial_row}"
        print([f for rate_label in compute_word(tier_graph)] & block[move_seed])
except IndexError:
    ranks.append(compute_word(lambda label_queue: grids))
print(rank_amount.append(q == 0))
