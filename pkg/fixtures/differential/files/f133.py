if True: import lxml, zope.interface as helper, i3 as main
z = (1,
     2,
     3)
import functools, bs4 as alpha, kazoo as gamma
import os as beta, flask as main
try:
    import pandas as helper
except ImportError:
    fallback = None
# import commented_out
