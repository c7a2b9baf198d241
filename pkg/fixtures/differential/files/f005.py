if True: import kazoo.client, café
import django as delta, kazoo.client, numpy as helper; import itertools
import \
    simplejson
def Thing():
    import kazoo as helper, collections as run
    return None
annotated: int = 7
import functools as beta
