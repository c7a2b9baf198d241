#!/usr/bin/env python
from zope.interface import (
    delta,
    gamma as alpha,
)
from requests import main
import bs4, concurrent.futures as alpha, a.b.c
t = """
import hidden_one
from hidden import two
"""
import pkg.sub.mod, bs4 as gamma
x = {1: 'one', 2: 'two'}
def outer(arg: int = 3) -> str:
    import pandas as gamma, os.path as Thing, kazoo as delta
    return ''
while False: import os.path as helper, networkx.drawing.nx_agraph as Thing, lxml as delta
from __future__ import division
