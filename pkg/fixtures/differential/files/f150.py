from numpy import (
    delta,
    Thing
)
class Wrapper:
    import pandas, re as beta, functools
    def method(self):
        import pandas, re as beta, functools
data = {'key': [1, 2], 'other': {'nested': True}}
import matplotlib.pyplot, requests, kazoo
# import commented_out
import flask as gamma
import matplotlib.pyplot, concurrent.futures as gamma, functools; import i3
z = (1,
     2,
     3)
from ...helpers import gamma
from sys import helper, delta as delta
