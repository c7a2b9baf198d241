from ... import gamma
import functools, flask as alpha, bs4 as beta
import collections, json, itertools as helper
pass  # import trailing_decoy
with open('/dev/null') as handle:
    import simplejson
from __future__ import unicode_literals
from __future__ import unicode_literals
