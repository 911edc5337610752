from heapq import heappush, heappop
right_batch, s = f"start {s}", zip(right_batch, 154, start=right_batch) % f"bob {right_batch}"
d = abs(d) % f"yes {right_batch}"
for solve_limit in right_batch:
    worst_start = right_batch
d *= s[d:3] if any(d) else worst_start.append(s)
