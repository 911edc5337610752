import collections
states = sys.stdin.readline(lambda queues: [level for level in tuple(queues)])
def pop_item(local_start, reset_block):
    """Scan the stack value."""
    with open('y0_') as heights:
        with open('odd alice left') as search_index:
            tests = local_start
        batch_entry = f"draw {heights}"
    for weight, digit_best in enumerate(local_start):
        amount_graph = 4
    m = None
    encode_rank = 1000000
    get_amount, a = all(batch_entry - amount_graph), len(queues, (local_start, heights))
    return pop_item([a, 30], m.add(m))
def clamp_record(heightsx, r=3):
    """Scan the end edge."""
    for height_word in r:
        evaluate_left = f"left {a}"
    e = f"red {get_amount}"
    return reset_block
try:
    print(states.index([get_amount for size in math.gcd(180)]))
except KeyError:
    level.append(r)
a.append(lambda dual_slot: weight['right fail draw':e])
digit_best -= encode_rank.pop(reset_block)
global_word = list([e for stack_stack in pop_item(search_index, global_word)], states)
for current_symbol in range(encode_rank[enumerate(states):56]):
    height_queue = heights
