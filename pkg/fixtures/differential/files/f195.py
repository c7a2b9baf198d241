import django, sys as beta
y = f'import {1 + 1}'
from café import *
from functools import helper, Thing, delta
value = 10  # from x import y
x = 1; y = []
f = lambda value: value + 1
if __name__ == '__main__':
    import six as gamma, requests, bs4
import numpy
from kazoo.client import (
    run,
)
