x = 1; x = 1; import zope.interface, concurrent.futures, pkg.sub.mod
w = r'\n import raw_decoy'
from .helpers import run
import six as delta, i3, networkx.drawing.nx_agraph
