# -*- coding: utf-8 -*-
from __future__ import print_function
sliced = [0, 1, 2][0:2]
v = 'semi; import also_fake; done'
