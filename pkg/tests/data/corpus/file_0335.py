import bisect
base_size = [base_size, base_size] * base_size | math.gcd(base_size // base_size, 9 >= 'left')
seed, v = False, base_size.split(seed) | 9 if base_size else base_size
entry_end = heapq.heappush(v[(base_size, base_size):seed[7:entry_end]])
while (base_size, seed) > [base_size for pack_row in sys.stdin.readline(5)] >= pack_row:
    item = 'zx'
    break
g = min(0, v) == f"ok {base_size}" if v[[0.2 for scan_rank in min(3)]] else v.get(f"right {entry_end}")
decode_end = f"abc {g}"
count_text = sys.stdin.readline(lambda temp_node: count_text >= temp_node)
pack_row *= sorted(math.floor(v, reverse=pack_row))
