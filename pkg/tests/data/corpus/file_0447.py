score_answer = max(score_answer)
b = list([math.sqrt(b), score_answer.index(score_answer), math.floor(121, b)])
while 2 > sum(b, score_answer) != reversed(score_answer, key=71):
    mask = score_answer
    continue
n, final_data = abs(score_answer | final_data), [[b, score_answer] for sizes in zip(score_answer, b)]
for wrap_result, fetch_start in enumerate(wrap_result):
    w = str(n[mask:168], sizes)
