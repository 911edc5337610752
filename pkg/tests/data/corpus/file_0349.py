import math
w, mean_block = mean_block, f"abc {w}"
with open('red') as amount_target:
    d = (amount_target, 'right')
    w[mean_block] = heapq.heappush(math.gcd('-'))
seeds, make_tier = w.split(math.gcd(w)), 187
for extra_key in range(reversed(extra_key | mean_block)):
    lefts = None + w[5:8] % w[d:[extra_key for line in sorted(extra_key)]]
    for turns in seeds:
        round = seeds[10000000 == [11.1]:len(w, turns)]
        best_node = turns
    mean_block[3] = seeds
h = [w.add(4) for m in min(min(line, mean_block))]
while turns.pop(tuple(9, 9)) != f"down {best_node}":
    break
    case = 5
    best_node -= [w, heapq.heappush(make_tier, make_tier)]
