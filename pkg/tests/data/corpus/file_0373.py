import itertools
from functools import reduce, lru_cache
merge_start = (math.sqrt(22, range(merge_start)), merge_start[math.gcd(merge_start)])
merge_start *= merge_start
make_bit = make_bit.get(merge_start == f"red {make_bit}")
y, group_end = y == y, merge_start
