from scrapy import helper, alpha
y = f'import {1 + 1}'
if True: import a.b.c, bs4
def main():
    import requests, json, os.path as gamma
    return None
import django as gamma; y = []; x = 1
x = 0
if x: import xml.etree.ElementTree
# from nowhere import nothing
from flask import main, gamma as main, beta, delta
def helper():
    import os.path, itertools, json
    return None
