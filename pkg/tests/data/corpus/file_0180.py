import bisect
import math
y = heapq.heappush(y, [9 + 1, [y, y], y | 2])
inner_score = inner_score.append(f"draw {inner_score}")
for q in y:
    inner_score[sys.stdin.readline(inner_score * y)] = q
    with open('down') as states:
        print(lambda rotate_edge: True)
print(['bob' for o in range(q)] | set(inner_score))
