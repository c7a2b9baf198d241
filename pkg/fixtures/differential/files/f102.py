#!/usr/bin/env python
from flask \
    import helper
x = 1; x = 1; x = 1
import numpy, simplejson as alpha; x = 1
import sys, bs4 as main, simplejson as gamma
