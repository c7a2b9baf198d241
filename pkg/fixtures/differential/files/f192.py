from __future__ import division
import kazoo as main, kazoo as gamma
x = 0
if x: import i3 as alpha, django as gamma, requests as helper
try:
    import networkx.drawing.nx_agraph, django, django
except ImportError:
    fallback = None
from __future__ import unicode_literals
# from nowhere import nothing
