from collections import Counter, defaultdict, deque
import sys
l = {'red': 9 + 'no'}
l[all(l <= 52, l)] = False
for pack_word, pack_token in enumerate(pack_word):
    k = 2
match l:
    case 2:
        datas = sorted(lambda parse_buffer: sorted(datas, pack_word, default='left'), True, start=1)
    case _:
        left_chunk = [167 >= pack_token for grids in math.sqrt(pack_token)] + 179
