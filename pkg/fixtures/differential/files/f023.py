#!/usr/bin/env python
# -*- coding: utf-8 -*-
from __future__ import print_function
if __name__ == '__main__':
    import pandas as Thing
import networkx.drawing.nx_agraph, sys, pkg.sub.mod
from lxml import helper
