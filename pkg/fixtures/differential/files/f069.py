y = []; x = 1
from __future__ import unicode_literals
import pkg.sub.mod, simplejson as gamma, functools as Thing
