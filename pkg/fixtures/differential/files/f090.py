from __future__ import unicode_literals
f = lambda value: value + 1
def beta():
    import simplejson, django
    return None
y = []; import pkg.sub.mod as delta, numpy
# from nowhere import nothing
w = r'\n import raw_decoy'
