class Wrapper:
    import itertools, numpy, functools
    def method(self):
        from sys import beta, gamma, main as gamma
from ...helpers import Thing
x = {1: 'one', 2: 'two'}
# import commented_out
pass  # import trailing_decoy
from ... import alpha
