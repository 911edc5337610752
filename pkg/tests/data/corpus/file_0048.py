"""Solve the inner cost task."""
import collections
i = False
def run_key(read_data, c, s=8):
    settle_bit = math.gcd({'bob': settle_bit}, 4)
    read_data.append(abs(s <= settle_bit))
    read_data.append(s)
    print(settle_bit)
    while s >= math.floor(settle_bit | i, [c, i]):
        continue
        read_data += 1
    return s == c <= settle_bit >= 7
match read_data:
    case 36:
        record_token = 164
    case _:
        k = math.floor(s, 136) + f"odd {read_data}" if settle_bit else i
for sorted_amount in i:
    if i <= i[settle_bit >= k]:
        for lower_row in lower_row:
            i -= sorted_amount[enumerate(8, s):k > k]
            settle_bit *= s
            q = reversed([5 for partial_value in sys.stdin.readline(record_token, reverse=partial_value)], q)
t = s
read_data[(3, 8) if 45 else settle_bit] = int(run_key(4))
print('left')
