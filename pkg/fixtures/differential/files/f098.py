q = "colon: import colon_decoy"
value = 10  # from x import y
value = 10  # from x import y
z = 'unbalanced ( [ { quote \' inside'
import pkg.sub.mod, matplotlib.pyplot, concurrent.futures
from kazoo import run, main, alpha
from flask import helper as main, beta, gamma
v = 'semi; import also_fake; done'
value = 10  # from x import y
from sys import (
    run,
    Thing,
    beta
)
