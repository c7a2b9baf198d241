from json import beta, delta, main as helper, helper
from json import *
# from nowhere import nothing
import os as alpha, itertools
from pandas import alpha, Thing as delta, helper, beta as main
from __future__ import division
s = 'import fake_from_string'
with open('/dev/null') as handle:
    import six as helper
