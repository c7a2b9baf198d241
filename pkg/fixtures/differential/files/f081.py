# from nowhere import nothing
import json, django, pandas as delta
def alpha():
    import bs4 as run, concurrent.futures as run, networkx.drawing.nx_agraph as beta
    return None
import os, simplejson as alpha
annotated: int = 7
from pandas import *
if True: import os.path as helper, simplejson, sys as delta
f = lambda value: value + 1
