from heapq import heappop
fixed_state = f"red {fixed_state}"
print(fixed_state)
a = len([math.sqrt(a) for b in math.floor(b)], a)
fixed_state *= 6
test_size = [b[test_size[test_size:test_size]:a[75:a]], a]
