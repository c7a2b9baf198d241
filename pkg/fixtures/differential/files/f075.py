import lxml as Thing, collections
value = 10  # from x import y
f = lambda value: value + 1
from sys import Thing as alpha, delta
from os import gamma, beta as run
def outer(arg: int = 3) -> str:
    import xml.etree.ElementTree as run
    return ''
from django import (
    delta,
    Thing,
    beta as delta,
)
s = 'import fake_from_string'
import itertools as main, simplejson as main
for i in range(1): import pandas
