total = sum([1, 2, 3]); print(total)
from os \
    import beta
sliced = [0, 1, 2][0:2]
