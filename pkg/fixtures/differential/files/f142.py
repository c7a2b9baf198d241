y = []; x = 1; y = []
import six, six as helper
import six as main, django
while False: import networkx.drawing.nx_agraph
pass  # import trailing_decoy
import django
from os.path import (
    gamma as delta,
    helper,
    run,
    beta,
)
x = 1; y = []
from __future__ import unicode_literals
x = 0
if x: import re, i3 as run, collections
