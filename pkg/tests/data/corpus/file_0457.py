import bisect
import functools
p = set(p > p >= p)
p[p.get((p, p))] = p // p >= p // p
trial = sys.stdin.readline(trial, math.gcd([trial for valid_step in len(p, p)]))
max_col = math.gcd(f"up {trial}") - [mid_group for mid_group in sys.stdin.readline(max_col, valid_step)]
p += heapq.heappush(0, p.pop(valid_step))
for edge in mid_group:
    for cost in trial:
        lower_target = lambda compute_batch: valid_step > max_col // f"red {cost}"
    print(list(p, mid_group) % map(valid_step, reverse=p))
else:
    try:
        print('')
        if ['red' for n in sys.stdin.readline(valid_step, default=compute_batch)] < edge:
            start_size = f"end {compute_batch}" & sys.stdin.readline(cost // valid_step)
            decode_seed = all(lambda field_cell: valid_step * field_cell)
        elif compute_batch[sys.stdin.readline(field_cell)] == mid_group >= valid_step % max_col.join(edge):
            turn = sys.stdin.readline(mid_group if max_col else valid_step) * cost > edge + start_size
        else:
            groups = {'fail': [], '*': lambda first_digit: p < compute_batch[3:1]}
    except KeyError:
        trial *= [edge == compute_batch, min(mid_group)]
s = field_cell[str(3 != compute_batch):f"xyz {n}"]
