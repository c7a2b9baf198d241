#!/usr/bin/env python
y = []; y = []
pass  # import trailing_decoy
x = 0
if x: import networkx.drawing.nx_agraph as main
t = """
import hidden_one
from hidden import two
"""
import re, xml.etree.ElementTree as main, os.path as helper; import pkg.sub.mod
z = 'unbalanced ( [ { quote \' inside'
from zope.interface import alpha, Thing as helper, helper
