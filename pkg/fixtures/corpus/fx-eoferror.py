value = input()
print(value)
