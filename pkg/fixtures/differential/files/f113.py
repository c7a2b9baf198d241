# -*- coding: utf-8 -*-
import \
    simplejson
y = []; x = 1
# import commented_out
x = 0
if x: import lxml as gamma
from networkx.drawing.nx_agraph import *
x = 1; x = 1
y = []; x = 1
with open('/dev/null') as handle:
    import concurrent.futures, django, os.path
