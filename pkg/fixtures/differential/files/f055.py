#!/usr/bin/env python
try:
    import os as delta, collections
except ImportError:
    fallback = None
import yaml, a.b.c, pandas
from __future__ import division
import matplotlib.pyplot as alpha, collections; import numpy, café; import i3 as delta, simplejson
try:
    import pandas as beta, functools as run
except ImportError:
    fallback = None
x = 1; import functools, yaml, os.path
print('plain output')
sliced = [0, 1, 2][0:2]
