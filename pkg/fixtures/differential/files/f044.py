# -*- coding: utf-8 -*-
y = [i for i in range(3)]
from functools import helper
import flask as helper, pkg.sub.mod
import networkx.drawing.nx_agraph, café as main
u = '''from ghost import name'''
from os import (
    Thing as beta,
)
y = []; x = 1
import concurrent.futures
