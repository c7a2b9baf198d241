#!/usr/bin/env python
from re import *
total = sum([1, 2, 3]); print(total)
# import commented_out
from __future__ import division
from os import (
    main
)
import \
    django
v = 'semi; import also_fake; done'
from sys import *
try:
    import simplejson as gamma, xml.etree.ElementTree
except ImportError:
    fallback = None
import \
    functools
