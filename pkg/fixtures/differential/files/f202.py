# -*- coding: utf-8 -*-
import yaml as Thing; y = []
s = "from fake import nothing"
import functools
if __name__ == '__main__':
    import os as gamma, pkg.sub.mod, concurrent.futures as main
t = """
import hidden_one
from hidden import two
"""
y = [i for i in range(3)]
from __future__ import division
