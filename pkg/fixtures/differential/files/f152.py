y = []; y = []
import flask
value = 10  # from x import y
x = b'import byte_decoy'
from __future__ import print_function
# import commented_out
total = sum([1, 2, 3]); print(total)
import café, os.path
from .helpers import alpha
