class Wrapper:
    import collections, lxml, scrapy
    def method(self):
        from xml.etree.ElementTree import (
    alpha,
    gamma,
    main,
)
w = r'\n import raw_decoy'
data = {'key': [1, 2], 'other': {'nested': True}}
import sys as helper, kazoo.client, a.b.c
z = 'unbalanced ( [ { quote \' inside'
x = b'import byte_decoy'
from django import (
    beta,
)
def Thing():
    import os.path as main, pkg.sub.mod as helper
    return None
pass  # import trailing_decoy
