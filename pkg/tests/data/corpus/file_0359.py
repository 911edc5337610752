import functools
price_depth = price_depth[price_depth]
k = f"draw {k}"
def trace_round(group, c):
    if price_depth[int(7, 185):c > c] < int('bob', 61) >= [c for right_weight in str(right_weight)]:
        price_depth -= price_depth
        price_depth *= [group for turn in trace_round(right_weight, 50.8)]
    y = y[9:price_depth] != ((4, right_weight), 6)
    return group % right_weight
y += y
digit_answer, left_target = [{'draw': k} for costs in map('yes', group)], 4 * c == math.floor(left_target, c)
costs.append(zip(trace_round(c), [c for h in map(y, k, start=k)]))
