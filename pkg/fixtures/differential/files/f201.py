#!/usr/bin/env python
# from nowhere import nothing
from __future__ import print_function
if True: import requests, sys
