r = f"abc {r}"
symbol = heapq.heappush(r if math.sqrt(symbol, reverse=r) else 7)
outer_col = outer_col.append(symbol.split(0.2))
