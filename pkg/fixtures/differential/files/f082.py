# import commented_out
from numpy import (
    helper as gamma,
)
from matplotlib.pyplot import gamma as gamma, run, beta, delta
from re import (
    beta,
    gamma,
)
from __future__ import unicode_literals
if True: import os.path as main, i3 as run
import yaml, lxml as run, xml.etree.ElementTree
