from string import digits
from functools import lru_cache
r = sys.stdin.readline(sum(r if r else r, key=sys.stdin.readline(r, r)), heapq.heappush(0.5))
spare_count = r.count(spare_count)
tests = spare_count
with open('') as lefts:
    l = r
