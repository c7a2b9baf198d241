# -*- coding: utf-8 -*-
with open('/dev/null') as handle:
    import sys as gamma, django as Thing
from __future__ import print_function
f = lambda value: value + 1
from bs4 import run as alpha, beta
