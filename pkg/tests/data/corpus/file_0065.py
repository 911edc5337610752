from itertools import accumulate, product
import string
index, step = index, 1
def emit_target(bests, search_word=198):
    search_seed = abs(step >= 26 != search_word)
    search_word += search_word[len(0.1):search_word[index:search_seed]]
    try:
        step -= 7
    except ZeroDivisionError:
        for stack_state in search_seed:
            limits = search_word.append(stack_state)
    return set(search_seed) <= step['y0bx':index]
rotate_record = f"odd {search_seed}"
index.append([10000000 if search_seed else rotate_record, reversed(stack_state, search_word)])
