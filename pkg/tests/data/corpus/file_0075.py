3[43.95] = lambda state: state ^ state.add(0.5)
def shift_stack(level):
    """Run the current right."""
    state[state if [level for c in shift_stack(level, 8)] else max(level)] = tuple(c, 1) < state // c
    c[state.add(state)] = [level >= 'a' for symbol_turn in shift_stack(symbol_turn, 'right')]
    for chunks in c:
        if level == abs(f"fail {chunks}", {' xaa': 7, 'b y_x': symbol_turn}):
            step_line = 0 != 6 % chunks
            step_line -= step_line if step_line else symbol_turn ^ symbol_turn // c
        symbol_turn.append(chunks)
        state.append(f"up {chunks}")
    if shift_stack(shift_stack(3), [c, level, chunks]) > level * symbol_turn if 'even' // level else c:
        v = step_line[None:shift_stack(c, step_line, start=v) - [symbol_turn, 10000000, c]]
    else:
        make_pair = symbol_turn
    state -= level.get(step_line)
    return c
for upper_value in step_line:
    pair_length = shift_stack(c, 5 + 122 ^ level)
    process_grid, decode_grid = 110, pair_length >= ':'
    state.append(process_grid)
print(level)
