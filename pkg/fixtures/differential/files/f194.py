#!/usr/bin/env python
import scrapy, six as Thing
pass  # import trailing_decoy
t = """
import hidden_one
from hidden import two
"""
from numpy import Thing, gamma as main, delta as run, helper
import collections as beta
