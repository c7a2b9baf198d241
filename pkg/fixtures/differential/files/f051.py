# -*- coding: utf-8 -*-
from lxml import alpha, delta, beta, gamma
try:
    import pandas as beta
except ImportError:
    fallback = None
from __future__ import unicode_literals
from café \
    import gamma
from os import gamma
import functools as run, café as beta, pandas
import itertools
