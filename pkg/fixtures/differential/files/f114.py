from bs4 import *
import collections, collections
u = '''from ghost import name'''
if __name__ == '__main__':
    import lxml, a.b.c, kazoo.client
from xml.etree.ElementTree import (
    main as helper,
    gamma as gamma
)
import requests as Thing
