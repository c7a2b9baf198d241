#!/usr/bin/env python
from pandas import (
    run
)
# import commented_out
def alpha():
    import matplotlib.pyplot
    return None
w = r'\n import raw_decoy'
from lxml import helper, run as beta, gamma, beta
def outer(arg: int = 3) -> str:
    import django
    return ''
def outer(arg: int = 3) -> str:
    import os, os.path as main, os.path as helper
    return ''
w = r'\n import raw_decoy'
