import lxml as gamma, sys
try:
    import re as main, requests, django as delta
except ImportError:
    fallback = None
from re import *
s = "from fake import nothing"
t = """
import hidden_one
from hidden import two
"""
x = b'import byte_decoy'
class Wrapper:
    import json, flask as main, kazoo.client as delta
    def method(self):
        from lxml import main, Thing, gamma
import os.path
import scrapy
