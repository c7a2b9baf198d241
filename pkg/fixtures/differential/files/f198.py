# -*- coding: utf-8 -*-
from café import (
    run as alpha,
    delta,
    alpha as gamma,
)
x = {1: 'one', 2: 'two'}
x = 0
if x: import numpy, numpy as beta
