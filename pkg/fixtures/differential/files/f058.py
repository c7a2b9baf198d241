w = r'\n import raw_decoy'
y = f'import {1 + 1}'
try:
    import numpy
except ImportError:
    fallback = None
import json, yaml, kazoo as delta
y = f'import {1 + 1}'
class Wrapper:
    import django, a.b.c as gamma, networkx.drawing.nx_agraph as helper
    def method(self):
        import django, a.b.c as gamma, networkx.drawing.nx_agraph as helper
from __future__ import division
