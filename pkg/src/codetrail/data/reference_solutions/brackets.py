def wrap(s):
    if len(s) <= 2:
        return s
    return s[0] + "(" + wrap(s[1:-1]) + ")" + s[-1]

print(wrap(input().strip()))
