from numpy import alpha, Thing, helper
with open('/dev/null') as handle:
    import django as run, flask, json
from concurrent.futures import beta, main, Thing
y = [i for i in range(3)]
from networkx.drawing.nx_agraph import alpha
from bs4 import *
