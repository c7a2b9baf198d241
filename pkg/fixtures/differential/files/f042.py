value = 10  # from x import y
from pandas import (
    run,
    gamma,
    beta
)
z = 'unbalanced ( [ { quote \' inside'
f = lambda value: value + 1
from __future__ import print_function
import itertools, collections, xml.etree.ElementTree
