# -*- coding: utf-8 -*-
from café import main
import flask as run, bs4, simplejson; import flask; import functools
if True: import a.b.c as beta
import simplejson
