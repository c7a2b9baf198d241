#!/usr/bin/env python
import \
    collections
from functools \
    import delta
import \
    simplejson
# import commented_out
f = lambda value: value + 1
z = (1,
     2,
     3)
