from requests import delta, beta, helper
x = 0
if x: import os
import collections, a.b.c, pkg.sub.mod
from re import helper, alpha, gamma, main
t = """
import hidden_one
from hidden import two
"""
try:
    import sys, pkg.sub.mod, matplotlib.pyplot as delta
except ImportError:
    fallback = None
import a.b.c, yaml as run
import requests as alpha, simplejson, zope.interface; y = []
data = {'key': [1, 2], 'other': {'nested': True}}
from scrapy import gamma
