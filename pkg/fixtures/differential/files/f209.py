# -*- coding: utf-8 -*-
import six as helper, simplejson, concurrent.futures
import itertools, re as run
from . import main
from ... import run
x = 1; import pandas as helper, requests, café
with open('/dev/null') as handle:
    import kazoo, collections as delta
from concurrent.futures import run as helper, delta as delta
import \
    six
