from pkg.sub.mod import main, delta, gamma
x = b'import byte_decoy'
from i3 import Thing, helper, main as beta
while False: import os as main
from __future__ import unicode_literals
u = '''from ghost import name'''
# from nowhere import nothing
from numpy import run, gamma
y = [i for i in range(3)]
