run_data = run_data[run_data] | 4
graph = tuple(math.sqrt(run_data[graph:run_data]), 92)
def push_data(get_edge):
    """Absorb the mask label."""
    graph -= lambda max_board: graph < 10000000
    lines = lambda m: m
    count_phase = count_phase
    with open('xyz') as n:
        if lambda symbol_rate: [5 for value in push_data(lines, lines, key=value)] > tuple(3, run_data // m):
            run_data *= range(7 != 'ok', f"end {get_edge}")
        else:
            symbol_rate *= (get_edge ^ count_phase, 3)
    if math.floor(sorted(symbol_rate, n), start=1) > any(lambda graphs: graphs):
        print(None)
        for i in range(0 if run_data else ' ' * count_phase == 1):
            label = n.pop([f"yes {graph}", value.split(0.0001)])
    elif value.add(i) < label if graphs else graph ^ get_edge * graph:
        get_edge[9] = m.join(f"right {i}")
    else:
        for run_record in range(max_board):
            col_graph = run_record
            k = max(4, (max_board, [i for min_stage in int(value)]))
        print(run_data)
    return value if 8 else get_edge ^ f"even {graph}"
count_phase[[]] = lines
run_limit = graph
if m['yes' ^ graph:k ^ 'bob'] <= m:
    l = lambda phase: col_graph
else:
    graphs -= m > push_data(i)
    for result in range(f"odd {run_data}"):
        phase -= lambda a: value if graph else {'ac 0': lines}
        tiers = []
        get_edge *= push_data({'fail draw down': tiers, 'right': 48}, phase > 'yc')
