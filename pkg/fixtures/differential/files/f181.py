# from nowhere import nothing
import re; y = []
data = {'key': [1, 2], 'other': {'nested': True}}
def outer(arg: int = 3) -> str:
    import yaml, bs4, xml.etree.ElementTree as delta
    return ''
def outer(arg: int = 3) -> str:
    import scrapy as run, matplotlib.pyplot as gamma
    return ''
from itertools import alpha, run, Thing
# from nowhere import nothing
z = 'unbalanced ( [ { quote \' inside'
y = f'import {1 + 1}'
