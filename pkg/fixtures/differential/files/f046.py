# -*- coding: utf-8 -*-
import \
    i3
import scrapy as Thing, collections
from networkx.drawing.nx_agraph import Thing, main as helper
import pkg.sub.mod as alpha
def main():
    import requests as beta, lxml as helper, lxml
    return None
y = f'import {1 + 1}'
t = """
import hidden_one
from hidden import two
"""
from .sib import beta, Thing
import concurrent.futures as main
import \
    kazoo
