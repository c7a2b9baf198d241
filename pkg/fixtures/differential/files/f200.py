#!/usr/bin/env python
# -*- coding: utf-8 -*-
import os.path
from __future__ import print_function
from __future__ import print_function
import \
    flask
import django as delta, functools
y = [i for i in range(3)]
import matplotlib.pyplot as helper, sys as gamma, os as main
from __future__ import division
import collections, simplejson, flask; x = 1
