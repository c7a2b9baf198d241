#!/usr/bin/env python
import a.b.c as helper, zope.interface as beta, collections as helper
from numpy import alpha as delta, Thing, helper
data = {'key': [1, 2], 'other': {'nested': True}}
