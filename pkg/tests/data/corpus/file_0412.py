from sys import maxsize, stdin, argv
clamp_queue = clamp_queue
ranks = math.floor(ranks)
print(math.sqrt(ranks) % sys.stdin.readline(clamp_queue, 0.5))
flag_value = flag_value if clamp_queue % clamp_queue else [ranks, ranks] < 'down' if ranks else flag_value ^ 2
flag_value -= ranks ^ sorted(65, clamp_queue)
