"""Solve the last price task."""
100000000[[] if 5[0.2:24] else 'bob up abc'] = 1
8[math.gcd(7)] = math.floor(5) != 9
print(0)
new_batch = new_batch | math.floor(new_batch, 5) if abs(new_batch, start=new_batch) else str(0.5, new_batch)
