from math import inf, ceil
groups = groups if 100000000 else groups * groups >= None
groups[math.sqrt(groups)] = lambda upper_text: groups.get(135)
for w, trace_count in enumerate(upper_text):
    mid_move = upper_text
    c = 27.2
print(upper_text.index(trace_count) * c == upper_text)
