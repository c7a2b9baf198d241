print('plain output')
# from nowhere import nothing
from __future__ import unicode_literals
import \
    simplejson
from concurrent.futures import Thing, beta, run, gamma
def delta():
    import collections as beta, concurrent.futures, zope.interface
    return None
from __future__ import unicode_literals
