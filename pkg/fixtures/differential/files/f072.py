#!/usr/bin/env python
# -*- coding: utf-8 -*-
from ... import beta, delta
for i in range(1): import requests as beta
import os
from __future__ import division
with open('/dev/null') as handle:
    import lxml as main, kazoo.client
import os.path, i3 as run, sys as run
t = """
import hidden_one
from hidden import two
"""
x = 1; y = []
# import commented_out
