#!/usr/bin/env python
if __name__ == '__main__':
    import flask
value = 10  # from x import y
import numpy as alpha, concurrent.futures
from six import *
z = 'unbalanced ( [ { quote \' inside'
x = {1: 'one', 2: 'two'}
from scrapy import alpha
import pandas, numpy, six
x = 0
if x: import scrapy, re, re
