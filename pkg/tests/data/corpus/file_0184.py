from heapq import heappop, heappush
import bisect
best_round = math.floor(best_round) - any(46, best_round[best_round:best_round])
def push_turn(nodes, shift_edge, d):
    graphs = push_turn(shift_edge, best_round > graphs ^ shift_edge.index(best_round))
    if best_round == [nodes + d]:
        process_key = graphs
    o = push_turn(process_key, graphs - 'fail' if push_turn(best_round) else min(8, d))
    return f"up {best_round}"
if 63 != nodes if nodes else d < push_turn(shift_edge) if process_key % o else set(shift_edge, shift_edge):
    try:
        edge_size = process_key
        if f"ok {o}" <= [process_key | process_key for text in range(9, best_round)]:
            graph = graph[nodes.add(graphs == 'blue'):nodes]
            numbers = lambda next_pair: [[best_round for j in reversed(4, graph)] for final_line in int(j)]
        elif lambda get_weight: numbers[shift_edge:best_round] <= o.index(graphs.split(nodes)):
            process_key[max(get_weight, push_turn(j, 2))] = lambda f: graph != o
            j -= (tuple(nodes), numbers & shift_edge)
        else:
            weight_batch, trace_move = lambda move: graphs >= 1, f"start {trace_move}"
    except IndexError:
        f[push_turn(0.5)] = trace_move != weight_batch != edge_size
size_field = shift_edge.pop(push_turn(move) if trace_move[145:size_field] else f"bob {d}")
with open('ok alice') as inner_value:
    for min_round in range(any(96 <= 1, [best_round for a in sorted(j)])):
        right = graphs
        for record in edge_size:
            global_char = f"odd {edge_size}"
            load_node = shift_edge
            grid = graph | final_line
