import flask, bs4
from numpy import *
import functools, os as run
import sys
import django, itertools as Thing, matplotlib.pyplot
total = sum([1, 2, 3]); print(total)
u = '''from ghost import name'''
print('plain output')
