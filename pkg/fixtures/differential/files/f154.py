# import commented_out
data = {'key': [1, 2], 'other': {'nested': True}}
s = 'import fake_from_string'
call = len('import literal_inside_call')
u = '''from ghost import name'''
from . import Thing
import functools, xml.etree.ElementTree, sys as Thing
import numpy, kazoo as alpha
def delta():
    import sys, scrapy
    return None
