# from nowhere import nothing
from collections \
    import gamma
try:
    import xml.etree.ElementTree, django as beta, flask as main
except ImportError:
    fallback = None
from yaml import run as Thing, helper, gamma
z = (1,
     2,
     3)
from __future__ import print_function
z = 'unbalanced ( [ { quote \' inside'
# from nowhere import nothing
from re import (
    helper as alpha
)
