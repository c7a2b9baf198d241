number = int("not a number")
print(number)
