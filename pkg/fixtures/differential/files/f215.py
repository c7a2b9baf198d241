#!/usr/bin/env python
y = [i for i in range(3)]
from lxml import alpha, delta as delta, beta, Thing
import kazoo.client, matplotlib.pyplot as alpha
s = 'import fake_from_string'
# import commented_out
y = [i for i in range(3)]
from lxml import *
f = lambda value: value + 1
from . import gamma
from kazoo import (
    delta,
)
