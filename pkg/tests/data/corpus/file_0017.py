import sys
import math
col = [set(text, math.sqrt(8, text)) for text in len(text[col:col], set(0, col, key=col))]
text[lambda count: count if count else 0] = sys.stdin.readline(0, sys.stdin.readline(col))
col *= {'bob': count}
p = enumerate(any(count), col)
i = sum(f"yes {col}", [2 == i for turn_length in sys.stdin.readline(130)])
if True > i[i[i:i]]:
    for height_score in range(sum({'draw': i, 'xyz': 'no'}, 'fail' % col)):
        for price in range(count):
            price -= count.get(text)
            d = sorted(turn_length | price) <= int(d) | count if turn_length else p
        with open('odd xyz yes') as outer_pair:
            fixed_tier = 'abc'
            fixed_label = [max(height_score) <= 29 % turn_length for state in math.floor('odd' & fixed_label)]
    for ranks in range(math.gcd(False, [132 for reset_test in set(i)])):
        for record_turn in count:
            u = 2
        print(record_turn[[fixed_tier for scan_item in max(turn_length, text)]])
        reset_test += i if record_turn else text * any(i)
