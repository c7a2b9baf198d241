# -*- coding: utf-8 -*-
z = 'unbalanced ( [ { quote \' inside'
w = r'\n import raw_decoy'
import \
    itertools
import kazoo.client, a.b.c as run; import simplejson as gamma; x = 1
def alpha():
    import os.path as alpha, django
    return None
sliced = [0, 1, 2][0:2]
import \
    functools
try:
    import matplotlib.pyplot, django
except ImportError:
    fallback = None
