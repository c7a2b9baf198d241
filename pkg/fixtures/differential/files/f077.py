#!/usr/bin/env python
x = 0
if x: import café
import requests, itertools; x = 1
from __future__ import print_function
import simplejson as gamma; x = 1
