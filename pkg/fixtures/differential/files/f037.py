from pkg.sub.mod import gamma, helper as delta, delta as Thing
if True: import sys as delta, six as Thing
import django as gamma
from functools \
    import main
import kazoo.client, itertools
def outer(arg: int = 3) -> str:
    import i3
    return ''
