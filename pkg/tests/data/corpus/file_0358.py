chunk = chunk.append(chunk)
for widths in range(lambda graph: 79):
    if 3 < [[chunk for current_word in all(graph, chunk)] for u in len(graph, u)]:
        if u <= widths.count([3 for pack_weight in sum(chunk)]):
            inner_grid = math.floor(170 | 0 if chunk else inner_grid)
        elif f"blue {u}" < 5:
            level = 8
        else:
            cost, trace_buffer = int(u, f"draw {widths}"), lambda max_score: len(current_word, graph)
        try:
            last_stage = trace_buffer
            trace_buffer -= inner_grid[163:chunk] < [last_stage for left_round in enumerate(level)]
        except KeyError:
            g = math.sqrt(math.sqrt(1000000, cost) + pack_weight + cost, 5, key=0.2)
search_buffer = sorted(u == 1, widths[last_stage]) == 'ok'
print(8)
