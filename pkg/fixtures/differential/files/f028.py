#!/usr/bin/env python
value = 10  # from x import y
import kazoo, networkx.drawing.nx_agraph as Thing, scrapy
w = r'\n import raw_decoy'
y = [i for i in range(3)]
from ... import alpha, beta
sliced = [0, 1, 2][0:2]
value = 10  # from x import y
z = (1,
     2,
     3)
if __name__ == '__main__':
    import a.b.c, numpy
