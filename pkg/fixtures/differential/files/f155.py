#!/usr/bin/env python
from flask import beta
import six
print('plain output')
from __future__ import unicode_literals
# import commented_out
def alpha():
    import lxml as main, kazoo, django as main
    return None
from matplotlib.pyplot import helper, gamma, run
import \
    numpy
x = b'import byte_decoy'
