sliced = [0, 1, 2][0:2]
class Wrapper:
    import pandas as delta
    def method(self):
        import pandas as delta
from __future__ import print_function
x = b'import byte_decoy'
def alpha():
    import kazoo.client as delta, concurrent.futures as alpha, re
    return None
x = 0
if x: import requests
