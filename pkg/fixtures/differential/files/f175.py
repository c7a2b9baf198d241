from simplejson import run as Thing
from flask import *
y = [i for i in range(3)]
total = sum([1, 2, 3]); print(total)
from kazoo \
    import alpha
with open('/dev/null') as handle:
    import café as delta, requests as delta, lxml as beta
from xml.etree.ElementTree import gamma, Thing, main as run, alpha
q = "colon: import colon_decoy"
x = b'import byte_decoy'
