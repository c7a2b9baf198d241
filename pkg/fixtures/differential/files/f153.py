#!/usr/bin/env python
w = r'\n import raw_decoy'
def outer(arg: int = 3) -> str:
    import requests, flask
    return ''
import numpy, matplotlib.pyplot
import sys, lxml
import numpy as alpha, os.path
z = (1,
     2,
     3)
import kazoo
with open('/dev/null') as handle:
    import lxml as main, i3
from xml.etree.ElementTree import (
    beta,
    delta as alpha
)
