from __future__ import print_function
import django
import concurrent.futures as main, zope.interface as main, sys as alpha
for i in range(1): import matplotlib.pyplot as Thing
try:
    import django, lxml
except ImportError:
    fallback = None
import zope.interface, yaml as gamma
