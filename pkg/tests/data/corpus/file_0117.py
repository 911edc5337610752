"""Solve the min stack task."""
import bisect
costs = any([costs] % min(100000))
costs += costs // costs if 'abc' <= costs else enumerate(costs, costs)
cell_width = ['abc alice up' for o in max(cell_width, 'odd')] >= cell_width
o -= math.sqrt(None)
