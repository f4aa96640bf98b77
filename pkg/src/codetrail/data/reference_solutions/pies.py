a, b, n = map(int, input().split())
total = (a * 100 + b) * n
print(total // 100, total % 100)
