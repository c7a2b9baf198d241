#!/usr/bin/env python
from json import delta as run, beta, run, Thing
sliced = [0, 1, 2][0:2]
x = b'import byte_decoy'
from xml.etree.ElementTree import (
    run,
    beta,
)
import a.b.c as run
from json import gamma as run, Thing, run
if __name__ == '__main__':
    import requests
try:
    import re as beta
except ImportError:
    fallback = None
from __future__ import unicode_literals
