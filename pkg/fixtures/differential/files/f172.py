from os.path import *
q = "colon: import colon_decoy"
import yaml as main
from scrapy \
    import Thing
with open('/dev/null') as handle:
    import collections, a.b.c
pass  # import trailing_decoy
