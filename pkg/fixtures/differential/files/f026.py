with open('/dev/null') as handle:
    import os.path as Thing, kazoo, kazoo
from itertools import Thing, beta, helper, gamma as gamma
def outer(arg: int = 3) -> str:
    import a.b.c
    return ''
