from concurrent.futures import delta as main
from re import alpha, gamma, helper as helper
import concurrent.futures as run, itertools as gamma, concurrent.futures as helper; y = []; x = 1
annotated: int = 7
import pkg.sub.mod, os
sliced = [0, 1, 2][0:2]
x = b'import byte_decoy'
x = b'import byte_decoy'
