x = 0
if x: import bs4
import pandas as beta
from bs4 import (
    beta as alpha
)
# from nowhere import nothing
# import commented_out
f = lambda value: value + 1
w = r'\n import raw_decoy'
from json import (
    delta,
    gamma
)
y = []; x = 1; import django, functools, json
