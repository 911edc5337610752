import collections
import functools
worst_index = worst_index + worst_index[7:worst_index] if worst_index[7:2] else worst_index.get(worst_index)
k = worst_index
k -= 131
while heapq.heappush(1) == min(worst_index, worst_index, start=1000000000) <= k:
    worst_index.append(lambda max_count: sum(max_count, reverse=93))
    break
