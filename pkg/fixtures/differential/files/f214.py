import os, yaml, six
s = 'import fake_from_string'
w = r'\n import raw_decoy'
from ..helpers import gamma, run
z = 'unbalanced ( [ { quote \' inside'
import scrapy, kazoo as beta, networkx.drawing.nx_agraph as helper
w = r'\n import raw_decoy'
def outer(arg: int = 3) -> str:
    import functools, pkg.sub.mod as gamma, lxml
    return ''
