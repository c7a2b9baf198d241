from json import *
z = (1,
     2,
     3)
z = 'unbalanced ( [ { quote \' inside'
t = """
import hidden_one
from hidden import two
"""
import re, json, networkx.drawing.nx_agraph
value = 10  # from x import y
from __future__ import division
