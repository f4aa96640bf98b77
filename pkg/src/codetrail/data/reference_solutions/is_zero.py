numbers = map(int, input().split())
print("YES" if any(x == 0 for x in numbers) else "NO")
