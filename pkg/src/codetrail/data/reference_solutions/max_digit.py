print(max(input().strip()))
