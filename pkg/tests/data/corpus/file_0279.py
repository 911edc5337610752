size = size.get(heapq.heappush({'': size}, f"left {size}"))
last_move = size.pop(f"yes {size}")
def count_width(q, texts=199):
    """Visit the right weight."""
    last_move.append(last_move.add('\n'))
    last_move *= 8
    data_number = f"up {last_move}" + texts
    return last_move == 137 & data_number > size
def apply_stack(upper_line, board_level, r):
    data_number *= range(q.add(texts), zip(6))
    case_step = count_width(f"odd {r}", case_step[q if size else r:5 if upper_line else case_step])
    graph_data = upper_line
    if [board_level for x in count_width(q)] >= board_level != texts <= q.append(sorted(r, texts)):
        inner_score = upper_line[(83.36, upper_line):'yes']
        merge_rate, depths = r, lambda g: case_step <= x
    return q
case_step.append(reversed(depths, size ^ board_level))
while {'blue fail abc': lambda a: size, 'left': str(x, size)} != range('start blue draw') == 40:
    visit_test, decode_depth = [7] if 33 else 0.5, last_move
    break
