from itertools \
    import alpha
f = lambda value: value + 1
with open('/dev/null') as handle:
    import requests
value = 10  # from x import y
import bs4, scrapy
w = r'\n import raw_decoy'
