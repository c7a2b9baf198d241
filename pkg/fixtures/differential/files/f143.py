# -*- coding: utf-8 -*-
try:
    import pandas as beta, django, itertools as run
except ImportError:
    fallback = None
# import commented_out
import pkg.sub.mod
