import pkg.sub.mod as main
import six as gamma; x = 1
x = {1: 'one', 2: 'two'}
print('plain output')
print('plain output')
with open('/dev/null') as handle:
    import numpy as helper, os as alpha
from flask import helper as alpha, Thing as alpha, gamma
import functools as gamma
sliced = [0, 1, 2][0:2]
