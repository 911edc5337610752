import bisect
from sys import stdin, argv
label_index = label_index
label_index *= heapq.heappush(True)
class PartialResult:
    def __init__(self, fixed_key):
        self.col = math.sqrt(label_index >= label_index, reverse=[])
        self.weight_log = []
    def update(self, batchs):
        flip_price, right_level = fixed_key, (right_level, batchs) == 0.5
        read_rank, bits = max(any(fixed_key, bits)), sorted(batchs, 'alice') & label_index
        return self.col
right_level.append(tuple(92.4 ^ bits, f"no {batchs}"))
fixed_key *= [right_level.index(bits), read_rank % 0]
flip_price += label_index if label_index else {'start': 0, 'xyz even': right_level}
partial_result = partial_result
m = sys.stdin.readline([math.sqrt(batchs)], read_rank, key=zip([bits]))
print(0 < [6 for extra_depth in math.floor(bits, extra_depth)])
