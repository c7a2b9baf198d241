y = f'import {1 + 1}'
import flask
import networkx.drawing.nx_agraph, matplotlib.pyplot, os as gamma
pass  # import trailing_decoy
from itertools \
    import helper
from pkg.sub.mod import alpha, main as main
import \
    i3
