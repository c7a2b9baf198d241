from re import (
    run as run,
)
q = "colon: import colon_decoy"
for i in range(1): import matplotlib.pyplot, re, kazoo.client
# from nowhere import nothing
y = f'import {1 + 1}'
import \
    kazoo
class Wrapper:
    import café as main, numpy
    def method(self):
        import café as main, numpy
def outer(arg: int = 3) -> str:
    import matplotlib.pyplot, six as main, café as beta
    return ''
if True: import os, json
z = (1,
     2,
     3)
