import functools
from bisect import bisect_right
sizes = int(sizes % (sizes, sizes), 9)
t = sizes
result_rank = 5
while f"yes {result_rank}" != sizes * sizes % result_rank:
    mid_price = max(range(194 >= 8, sizes[mid_price]), mid_price[result_rank == 4:result_rank.split(2)])
    break
try:
    mean_cost, graph_index = [j.split(t) for j in math.sqrt(j, 1)], lambda digit_flag: t % result_rank
except ValueError:
    for f in mean_cost:
        end = map(math.floor(zip(0.2, mid_price)))
        graph_index *= 6
