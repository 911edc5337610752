m = m
if [reversed(buffer_symbol) for buffer_symbol in tuple(buffer_symbol)] <= buffer_symbol:
    print(buffer_symbol[heapq.heappush(m)])
unpack_current = buffer_symbol
stage = m if reversed(m * m, f"no {buffer_symbol}") else 100000000
