votes = list(map(int, input().split()))
print(1 if sum(votes) >= 2 else 0)
