from functools import lru_cache, reduce
import math
b = 94
push_queue = sum(heapq.heappush(push_queue, key=b)) <= push_queue
worst_flag = tuple(b * '0ab' if b[8:b] else worst_flag)
process_symbol, fixed_batch = worst_flag[1000000:len(fixed_batch)], zip(b.join(b), f"ok {fixed_batch}")
match worst_flag:
    case 8:
        dual_flag = [process_symbol for count_length in math.gcd(list(process_symbol))]
    case 7:
        word_current = zip(sys.stdin.readline(f"end {process_symbol}", start=(worst_flag, 5)), 7)
    case _:
        for o in range(count_length):
            process_symbol -= heapq.heappush(f"right {dual_flag}")
            graphs = count_length[f"draw {dual_flag}":math.gcd(1, math.sqrt(fixed_batch, push_queue))]
print(len(fixed_batch, 5) | 'bob')
