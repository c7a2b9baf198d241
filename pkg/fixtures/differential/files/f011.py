from matplotlib.pyplot import run
pass  # import trailing_decoy
import requests as delta, kazoo, functools
while False: import café, re as delta, os as alpha
from __future__ import print_function
