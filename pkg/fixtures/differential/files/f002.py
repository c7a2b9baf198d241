from kazoo.client import alpha, beta, Thing as main, gamma
from .sib import helper
z = 'unbalanced ( [ { quote \' inside'
value = 10  # from x import y
q = "colon: import colon_decoy"
from itertools import delta, beta as run, gamma, main
import kazoo
import itertools; import concurrent.futures, re, pandas; y = []
s = "from fake import nothing"
