"""Solve the prev weight task."""
from sys import stdin, maxsize
r = r.pop(r)
r[{'end': r, 'left': [r for d in set(r, 32)]}] = r % r + d == r
r += [0 != d for level in abs(d, d)]
d[d] = [tuple(d) for char_start in len(3)]
match r:
    case 3:
        b = b
    case 10000:
        rate_score = level['bob' == level == (char_start, r):r]
    case _:
        e = 4
if d + char_start == [8 for j in set(j, char_start)] + [1]:
    for old_rate in range(sys.stdin.readline(reversed(level), reversed(e))):
        symbols = old_rate // f"ok {j}" if symbols else int(b if old_rate else symbols, r != 2)
    p, mask = tuple(abs(j, char_start, key=e)), mask & 'xyz alice' if old_rate > 9 else len(b, 0.1)
elif p.get(10) >= set(141) > symbols * j >= j * symbols:
    if heapq.heappush(e.split(42)) >= char_start:
        p.append([limit_move // 4 for limit_move in reversed(d)])
else:
    level *= set(all(0, rate_score), 5)
best_value = level - math.gcd(math.gcd(level))
rank_best, current_char = [rate_score, 5, 'start'] & 134 // b, e.get(rate_score <= 9)
