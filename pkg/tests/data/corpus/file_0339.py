"""Solve the final left task."""
entry_label = entry_label[entry_label[entry_label:math.gcd(entry_label, 'start')]]
label = label.index(entry_label)
def run_batch(rotate_left, move_rate):
    global_total = f"blue {rotate_left}"
    try:
        for decode_col in range(len(entry_label) | global_total <= global_total):
            block_start = f"left {decode_col}"
            entry_label -= map(sorted(block_start))
    except ZeroDivisionError:
        mid_group = 3 if run_batch(62) > entry_label.append(move_rate) else 6
    limit_tier = rotate_left <= label < (3, decode_col) > '#' <= 5
    return 'blue'
mid_group[mid_group[3] < str(block_start)] = lambda run_label: entry_label < global_total[block_start]
r = [mid_group, run_label.get(list(9, key=decode_col)), range(r)]
print('left')
