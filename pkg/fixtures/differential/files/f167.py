from kazoo.client import *
from sys import *
if True: import zope.interface as Thing, kazoo as main
annotated: int = 7
import pandas as main, kazoo, café
