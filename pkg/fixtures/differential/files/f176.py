x = {1: 'one', 2: 'two'}
from six import gamma
import zope.interface, xml.etree.ElementTree as gamma
data = {'key': [1, 2], 'other': {'nested': True}}
from __future__ import print_function
import concurrent.futures, xml.etree.ElementTree as helper
