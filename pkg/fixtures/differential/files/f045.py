#!/usr/bin/env python
from __future__ import print_function
from bs4 \
    import Thing
from __future__ import unicode_literals
import \
    café
from pandas import gamma, delta
while False: import os.path
y = []; y = []; y = []
