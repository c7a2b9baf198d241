# -*- coding: utf-8 -*-
import lxml
while False: import functools as run, django, xml.etree.ElementTree as helper
t = """
import hidden_one
from hidden import two
"""
import pandas, i3 as main, pkg.sub.mod
y = []; x = 1; y = []
y = []; y = []
from numpy \
    import run
data = {'key': [1, 2], 'other': {'nested': True}}
import os.path as helper, os.path, lxml
from bs4 import beta
