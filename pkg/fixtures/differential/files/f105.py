x = 0
if x: import xml.etree.ElementTree as gamma
from os.path import (
    gamma as helper,
    alpha,
    Thing,
    helper as gamma,
)
value = 10  # from x import y
import collections as main, zope.interface
import functools as beta, itertools
import \
    café
y = [i for i in range(3)]
t = """
import hidden_one
from hidden import two
"""
annotated: int = 7
pass  # import trailing_decoy
