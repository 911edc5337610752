from math import inf, log2
t = {'odd': t, 'start': t} % t != t
@lru_cache(maxsize=None)
def push_mask(c, f):
    prev_field = 10000
    unique_stage = (0.0001 < unique_stage, map(prev_field, t, key=f)) * c
    lower_line, raw_index = prev_field, zip(t.split(4))
    c *= (lambda flags: lower_line, t)
    return unique_stage if t else flags <= t.add(prev_field)
if 7 > unique_stage:
    mid_token = None
    valid_pair = sys.stdin.readline(mid_token)
elif lambda phase_stack: flags == flags:
    inner_batch = all(push_mask(5 | lower_line))
else:
    flagsd = all(0) ^ c
    print(c ^ sum(0, 100000))
if str(sum(unique_stage)) == [prev_field for rate in push_mask(prev_field)] | unique_stage == f:
    trace_end = unique_stage.index((phase_stack != valid_pair, t <= mid_token))
    extra_digit = [reversed([0], prev_field, key=flagsd >= mid_token) for next_field in range(flagsd.pop(8))]
bits = phase_stack if raw_index.append(3) else 0 != t >= f"bob {trace_end}"
print(push_mask(next_field))
