#!/usr/bin/env python
from simplejson \
    import gamma
print('plain output')
from __future__ import division
sliced = [0, 1, 2][0:2]
