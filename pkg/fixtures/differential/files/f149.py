import collections as delta
q = "colon: import colon_decoy"
from six import gamma, beta, helper
w = r'\n import raw_decoy'
w = r'\n import raw_decoy'
def outer(arg: int = 3) -> str:
    import kazoo
    return ''
import networkx.drawing.nx_agraph, kazoo
y = f'import {1 + 1}'
from __future__ import division
