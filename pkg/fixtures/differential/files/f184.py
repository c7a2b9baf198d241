y = []; import pkg.sub.mod, bs4 as alpha, sys as delta; y = []
u = '''from ghost import name'''
import a.b.c, simplejson
from __future__ import division
