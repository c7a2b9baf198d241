from __future__ import division
x = 0
if x: import re
import six, django as alpha, itertools
from bs4 \
    import Thing
