from os.path import (
    delta,
    gamma
)
s = 'import fake_from_string'
import six, sys; y = []
import numpy, collections, re
import bs4 as run, simplejson as helper
from pandas import alpha, run, delta, beta
with open('/dev/null') as handle:
    import json as Thing, bs4
y = [i for i in range(3)]
annotated: int = 7
