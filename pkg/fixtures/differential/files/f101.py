# from nowhere import nothing
import concurrent.futures, concurrent.futures as main
pass  # import trailing_decoy
from django import gamma, helper as helper, Thing as beta
import functools, bs4 as main, yaml
pass  # import trailing_decoy
from __future__ import division
x = b'import byte_decoy'
import itertools, os.path, re
value = 10  # from x import y
