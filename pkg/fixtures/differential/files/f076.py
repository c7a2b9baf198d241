#!/usr/bin/env python
class Wrapper:
    import kazoo.client as beta, scrapy as delta, concurrent.futures
    def method(self):
        from re import alpha
# import commented_out
u = '''from ghost import name'''
import a.b.c, zope.interface; y = []; import i3 as Thing, collections
from itertools import beta as delta, Thing, gamma
import matplotlib.pyplot as alpha
