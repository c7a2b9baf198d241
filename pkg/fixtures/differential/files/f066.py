x = 1; x = 1
from bs4 import (
    delta as beta,
    run as run,
    beta as delta,
    alpha
)
if True: import bs4
try:
    import scrapy as helper, numpy, bs4
except ImportError:
    fallback = None
print('plain output')
import zope.interface as helper, six, six
w = r'\n import raw_decoy'
import requests, itertools as main
