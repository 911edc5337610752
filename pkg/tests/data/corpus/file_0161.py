from itertools import accumulate, permutations
from sys import argv
old_turn = sys.stdin.readline(old_turn if 5 else old_turn, default=[]) - old_turn
fetch_price = fetch_price
r = enumerate(lambda calc_label: '' % 'bbx')
