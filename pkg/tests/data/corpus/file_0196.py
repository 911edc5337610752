from sys import stdin
word = f"fail {word}"
u, o = word.index(127), sys.stdin.readline(o, word) * o[' cb ':u]
o *= word
rank_weight = f"even {word}"
print([zip(rank_weight, rank_weight) for scores in tuple(8)])
