import networkx.drawing.nx_agraph, six, re
u = '''from ghost import name'''
# import commented_out
import zope.interface, os.path as gamma, collections
from numpy import alpha
from kazoo.client import Thing as delta, alpha, run, delta
v = 'semi; import also_fake; done'
f = lambda value: value + 1
from __future__ import unicode_literals
import kazoo, kazoo, requests
