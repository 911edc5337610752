from string import ascii_lowercase, digits
fixed_field = fixed_field
values = 165
with open('left even') as chunks:
    for i in i:
        print(3 | list(chunks, values))
        values -= values // 93 > [i]
    else:
        for outer_phase in i:
            count_current = chunks
