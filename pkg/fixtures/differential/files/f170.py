from re \
    import main
import \
    django
while False: import simplejson
q = "colon: import colon_decoy"
y = []; import concurrent.futures, requests, sys
t = """
import hidden_one
from hidden import two
"""
from __future__ import division
try:
    import networkx.drawing.nx_agraph as run, i3, kazoo
except ImportError:
    fallback = None
