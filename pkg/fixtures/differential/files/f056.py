def run():
    import xml.etree.ElementTree, pandas, itertools
    return None
from zope.interface import main, run, gamma as Thing
from requests import *
import yaml, django; x = 1; x = 1
f = lambda value: value + 1
from __future__ import print_function
from os.path import (
    Thing as main,
    main,
)
y = f'import {1 + 1}'
sliced = [0, 1, 2][0:2]
from itertools import run, beta as gamma
