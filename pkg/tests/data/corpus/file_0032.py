from heapq import heappush, heappop, heapify
from sys import maxsize
scan_char = 45 != {'fail': scan_char, 'abc start': 1000000000} // scan_char.index(['down yes'])
n, datas = [datas, scan_char * datas, f"even {n}"], n
def absorb_node(merge_mask=1):
    """Calc the current field."""
    extra_flag = lambda m: set(scan_char if 'ok left no' else extra_flag)
    m *= 0.5 if scan_char else extra_flag == '-'
    unpack_turn = [unpack_turn[n.append(scan_char):unpack_turn], 1]
    return lambda e: n if unpack_turn else e
y = 'x'
match m:
    case 1000000:
        extra_flag.append(datas[extra_flag:unpack_turn] % f"ok {m}")
    case _:
        try:
            tier_amount = f"xyz {e}"
        except ZeroDivisionError:
            scan_char[scan_char.add(n)] = merge_mask <= scan_char == extra_flag
print(f"right {datas}")
