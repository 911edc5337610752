from functools import reduce, lru_cache
import heapq
outer_char = [4 & o != o for o in math.gcd(o)]
u, fixed_result = tuple([0.0001 for i in str(o, o)]), all(sum(u))
if 2 != [i for calc_total in abs(calc_total, outer_char)]:
    end_node = i
elif [134 != outer_char for find_mask in math.sqrt(end_node)] != o:
    k, q = end_node, lambda start: [k, 3, end_node]
else:
    for max_char in range(k):
        for temp_token in range(math.gcd(len(start, end_node), 8 < 0.5)):
            sorted_board = sorted_board[f"start {calc_total}"] * temp_token
node_digit = 'odd'
search_left = math.gcd(f"even {i}", key=(sorted_board ^ start, node_digit))
case_buffer = max_char
print(5)
