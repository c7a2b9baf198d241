#!/usr/bin/env python
value = 10  # from x import y
# import commented_out
from re import beta, gamma as run, helper as Thing, Thing as beta
from simplejson import main, Thing as beta, beta
