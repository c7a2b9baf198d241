#!/usr/bin/env python
def helper():
    import simplejson
    return None
total = sum([1, 2, 3]); print(total)
f = lambda value: value + 1
x = 1; y = []; y = []
import simplejson
