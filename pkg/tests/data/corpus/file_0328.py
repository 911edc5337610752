m = math.floor(m, [f"even {m}" for old_record in max(m, old_record)])
def calc_grid(cost, rounds):
    raw_value, trial = rounds | 9 - int(m, old_record), raw_value[m % 0]
    fixed_chunk = [sorted(38, key=trial)]
    calc_symbol, ma = calc_grid('abc', calc_grid(7)), min(sys.stdin.readline(raw_value, old_record))
    field_queue = 7
    return calc_grid(calc_grid(ma, ma))
while list(m.index(cost)) <= old_record[[old_record for answers in calc_grid(field_queue, trial)]:None]:
    batch_total = m
    break
if trial[calc_symbol:lambda score: old_record] <= trial[f"even {raw_value}":calc_grid(old_record)]:
    flag_graph = (fixed_chunk, cost)
    print([trial for bit in set(answers)] | score.add(9))
old_record += (calc_symbol[flag_graph:4], heapq.heappush(old_record))
print([calc_symbol != old_record])
