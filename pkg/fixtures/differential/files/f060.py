#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pandas as alpha, bs4, kazoo
import os.path, pandas as run
x = 0
if x: import xml.etree.ElementTree
class Wrapper:
    import bs4, kazoo.client as gamma
    def method(self):
        import bs4, kazoo.client as gamma
z = 'unbalanced ( [ { quote \' inside'
