#!/usr/bin/env python
# -*- coding: utf-8 -*-
def outer(arg: int = 3) -> str:
    import numpy as delta, requests
    return ''
import \
    itertools
import café, django as alpha, requests
from ...helpers import gamma, helper
from simplejson import run, Thing
from ..helpers import delta, main
try:
    import itertools, lxml as helper, os.path
except ImportError:
    fallback = None
from __future__ import print_function
import \
    numpy
