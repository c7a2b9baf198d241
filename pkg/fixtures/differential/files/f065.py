from a.b.c import (
    gamma,
    delta,
)
from __future__ import division
import os.path as alpha
total = sum([1, 2, 3]); print(total)
# from nowhere import nothing
z = (1,
     2,
     3)
w = r'\n import raw_decoy'
from os import Thing as gamma, run, main as alpha
import simplejson
