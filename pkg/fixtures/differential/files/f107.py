x = b'import byte_decoy'
w = r'\n import raw_decoy'
from kazoo import (
    Thing
)
# import commented_out
import scrapy, matplotlib.pyplot, os; x = 1
import numpy, itertools, flask as Thing
import six as delta
