with open('/dev/null') as handle:
    import yaml as delta, numpy, sys
import networkx.drawing.nx_agraph, kazoo
for i in range(1): import kazoo as beta, functools, flask
from __future__ import print_function
import matplotlib.pyplot
with open('/dev/null') as handle:
    import kazoo
y = f'import {1 + 1}'
def gamma():
    import numpy
    return None
