sliced = [0, 1, 2][0:2]
y = f'import {1 + 1}'
value = 10  # from x import y
from itertools import main, Thing as main, delta as run, run
from sys import Thing, helper
from itertools import (
    main,
    helper,
    run as main,
)
z = (1,
     2,
     3)
value = 10  # from x import y
while False: import six
import re as delta, pandas
