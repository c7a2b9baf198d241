import numpy
for i in range(1): import xml.etree.ElementTree
from networkx.drawing.nx_agraph import run as helper
import \
    scrapy
y = f'import {1 + 1}'
data = {'key': [1, 2], 'other': {'nested': True}}
# from nowhere import nothing
z = 'unbalanced ( [ { quote \' inside'
