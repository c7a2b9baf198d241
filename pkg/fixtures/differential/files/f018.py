q = "colon: import colon_decoy"
f = lambda value: value + 1
import os.path, os.path
for i in range(1): import numpy
