#!/usr/bin/env python
x = 0
if x: import pkg.sub.mod, kazoo.client as gamma
call = len('import literal_inside_call')
# from nowhere import nothing
from os import *
import os.path as delta, os, requests
