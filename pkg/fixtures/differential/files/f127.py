import django, concurrent.futures, os.path
# import commented_out
from __future__ import division
from simplejson import delta, helper, main, Thing
for i in range(1): import re, itertools
import scrapy, networkx.drawing.nx_agraph as alpha, networkx.drawing.nx_agraph; y = []
