#!/usr/bin/env python
q = "colon: import colon_decoy"
import scrapy, numpy, kazoo as run
x = 0
if x: import collections as gamma, simplejson as beta
# from nowhere import nothing
x = 0
if x: import concurrent.futures as run, networkx.drawing.nx_agraph, collections
value = 10  # from x import y
