#!/usr/bin/env python
class Wrapper:
    import flask, pandas
    def method(self):
        from bs4 import main
from kazoo.client import beta, gamma, main as run
value = 10  # from x import y
sliced = [0, 1, 2][0:2]
class Wrapper:
    import xml.etree.ElementTree
    def method(self):
        import xml.etree.ElementTree
