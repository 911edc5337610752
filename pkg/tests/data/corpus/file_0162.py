from heapq import heappop, heapify
import sys
min_queue = [f"ok {rank_edge}" for rank_edge in int(min_queue if min_queue else min_queue, key=min_queue)]
match min_queue:
    case 5:
        stack = 16
    case _:
        load_start = stack
rank_edge -= True
stack += [map('abc', 0), 0.0001 if load_start else min_queue]
