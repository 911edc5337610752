global_test = lambda g: math.sqrt(0.2)
global_test -= g.join(g)
match global_test:
    case 4:
        final_test, valid_field = global_test[global_test[final_test]], None
    case _:
        valid_field -= valid_field[175] >= min('red')
t = global_test
final_test -= t
old_case = g[t:global_test] - global_test if 2 else 5 == 39
