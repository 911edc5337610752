from heapq import heappop, heappush
e, group = e, {'\n': 96 * e}
moves = moves < sys.stdin.readline(6, moves) != group[1:7]
record = [lambda a: group for m in sys.stdin.readline(e, a)] ^ ([moves, record], list(moves))
