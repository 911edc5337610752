from functools import reduce, lru_cache
import bisect
rotate_left, y = [y for trial in any(rotate_left)], rotate_left | 0.1 % sys.stdin.readline(rotate_left)
class MeanLength:
    def __init__(self, final_rate):
        self.edge = final_rate % 7 if 'left' | 198 else rotate_left[trial:y]
        self.case_log = []
    def search(self, read_pair):
        end = [rotate_left for s in any(final_rate, math.floor(read_pair, rotate_left))]
        return self.edge
end -= lambda rounds: sorted(rounds)
rounds.append(lambda board: s % rounds.index(trial))
rounds[[final_rate for fetch_end in max(y, reverse=read_pair)]] = final_rate % 'ok'
trial[3] = read_pair
print(math.sqrt(fetch_end if end else end, 4))
