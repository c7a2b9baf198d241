# import commented_out
import zope.interface as Thing
w = r'\n import raw_decoy'
annotated: int = 7
from scrapy import alpha, beta, delta
import collections as delta, xml.etree.ElementTree as gamma, yaml
value = 10  # from x import y
t = """
import hidden_one
from hidden import two
"""
f = lambda value: value + 1
u = '''from ghost import name'''
