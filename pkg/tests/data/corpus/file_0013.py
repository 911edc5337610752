"""Solve the lower best task."""
import math
from bisect import bisect_right, insort
calc_data = 170
block = calc_data
block *= 151 if block else block // block
block[7 > 15] = block
