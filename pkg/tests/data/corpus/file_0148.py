import functools
width_word = width_word.append([width_word] == width_word & width_word)
node_board = 6 - 1
costs = lambda length: (9, 6)
get_number = node_board.count(node_board ^ costs) // costs[length:width_word] + width_word
