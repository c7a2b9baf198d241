#!/usr/bin/env python
import functools, pkg.sub.mod
from django \
    import helper
s = 'import fake_from_string'
import sys
import \
    re
from networkx.drawing.nx_agraph import (
    Thing,
    gamma,
    beta,
    delta,
)
