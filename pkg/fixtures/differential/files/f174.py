while False: import re as beta
f = lambda value: value + 1
print('plain output')
from flask \
    import main
