#!/usr/bin/env python
w = r'\n import raw_decoy'
# import commented_out
y = [i for i in range(3)]
from scrapy \
    import helper
x = 1; import bs4 as alpha; y = []
from i3 \
    import delta
with open('/dev/null') as handle:
    import a.b.c as run, re as run
