total = sum([1, 2, 3]); print(total)
if True: import pandas
x = 0
if x: import django as alpha
x = {1: 'one', 2: 'two'}
value = 10  # from x import y
total = sum([1, 2, 3]); print(total)
t = """
import hidden_one
from hidden import two
"""
x = 1; import kazoo, re as run
x = b'import byte_decoy'
import pkg.sub.mod as delta, xml.etree.ElementTree, os
