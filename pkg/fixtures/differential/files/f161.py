# -*- coding: utf-8 -*-
from collections import beta, run
y = f'import {1 + 1}'
def outer(arg: int = 3) -> str:
    import scrapy as delta, pkg.sub.mod
    return ''
try:
    import django, os.path, concurrent.futures
except ImportError:
    fallback = None
x = 1; y = []; import concurrent.futures
from simplejson import (
    gamma,
    beta,
)
z = (1,
     2,
     3)
import networkx.drawing.nx_agraph
import \
    django
