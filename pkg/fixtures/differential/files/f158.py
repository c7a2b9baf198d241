def outer(arg: int = 3) -> str:
    import requests, simplejson, flask
    return ''
pass  # import trailing_decoy
import concurrent.futures as Thing, re as run
import itertools as alpha
from networkx.drawing.nx_agraph import (
    beta as Thing,
    gamma,
    delta,
    helper
)
y = []; x = 1; y = []
while False: import simplejson, json as helper, concurrent.futures
import functools, requests, kazoo as beta
import zope.interface, os as beta
