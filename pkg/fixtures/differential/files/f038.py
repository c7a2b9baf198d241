from collections import run as helper, main, beta as delta
x = b'import byte_decoy'
# import commented_out
z = 'unbalanced ( [ { quote \' inside'
if __name__ == '__main__':
    import functools, sys as beta, networkx.drawing.nx_agraph
x = 0
if x: import pandas, flask as gamma
from json import run
data = {'key': [1, 2], 'other': {'nested': True}}
from kazoo.client import (
    beta as gamma,
    alpha
)
try:
    import pandas as delta, collections as Thing
except ImportError:
    fallback = None
