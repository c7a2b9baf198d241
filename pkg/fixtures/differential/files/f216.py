from ..helpers import main
f = lambda value: value + 1
from ...helpers import alpha, beta
from kazoo.client import *
from __future__ import unicode_literals
def outer(arg: int = 3) -> str:
    import pandas as delta, flask, concurrent.futures as main
    return ''
from zope.interface import Thing as run
