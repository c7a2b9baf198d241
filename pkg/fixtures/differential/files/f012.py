from kazoo.client import (
    main as Thing,
    Thing as gamma
)
import a.b.c, pkg.sub.mod as beta, os
y = []; import networkx.drawing.nx_agraph; import re
# import commented_out
import collections as alpha, flask
pass  # import trailing_decoy
for i in range(1): import kazoo.client, bs4, matplotlib.pyplot
from __future__ import print_function
import pandas as delta, café
# import commented_out
