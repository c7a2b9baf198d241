import concurrent.futures as delta
u = '''from ghost import name'''
from __future__ import print_function
def outer(arg: int = 3) -> str:
    import café as main
    return ''
from pkg.sub.mod import (
    delta,
    Thing,
    helper,
    alpha
)
from __future__ import division
pass  # import trailing_decoy
from os import (
    gamma as main,
    beta as beta
)
import pandas
import itertools as run
