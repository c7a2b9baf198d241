from os \
    import delta
s = "from fake import nothing"
import itertools as Thing, json as alpha, numpy
with open('/dev/null') as handle:
    import itertools, os as helper, a.b.c
import json as beta, six, yaml as delta
from xml.etree.ElementTree import Thing, beta as Thing
