#!/usr/bin/env python
import pkg.sub.mod, café as main, bs4
import six, zope.interface; import requests as main, collections as alpha; import collections as Thing
import os.path as alpha, xml.etree.ElementTree as Thing
if __name__ == '__main__':
    import networkx.drawing.nx_agraph
y = []; import bs4, scrapy as main
import networkx.drawing.nx_agraph
