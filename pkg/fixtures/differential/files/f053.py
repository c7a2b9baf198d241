import i3, xml.etree.ElementTree as helper
from __future__ import division
import sys as run, bs4
if __name__ == '__main__':
    import i3, functools as main, zope.interface
from collections import helper, beta, alpha as helper
call = len('import literal_inside_call')
import xml.etree.ElementTree, functools as run
