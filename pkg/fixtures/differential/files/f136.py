#!/usr/bin/env python
from pandas import (
    delta,
)
s = "from fake import nothing"
# import commented_out
from i3 import (
    alpha,
    Thing,
    gamma as main
)
