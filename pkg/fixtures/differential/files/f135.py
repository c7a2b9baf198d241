# -*- coding: utf-8 -*-
annotated: int = 7
from .sib import helper
import simplejson as Thing
f = lambda value: value + 1
from __future__ import unicode_literals
u = '''from ghost import name'''
import numpy as alpha, xml.etree.ElementTree as Thing
