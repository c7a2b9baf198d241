#!/usr/bin/env python
y = []; import kazoo as beta; import networkx.drawing.nx_agraph as gamma
from six import run, main, beta as beta
total = sum([1, 2, 3]); print(total)
from json import run, Thing as run, gamma as gamma
