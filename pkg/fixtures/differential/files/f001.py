import pkg.sub.mod, concurrent.futures
from yaml import *
annotated: int = 7
import os.path as alpha, café as delta
s = 'import fake_from_string'
z = 'unbalanced ( [ { quote \' inside'
