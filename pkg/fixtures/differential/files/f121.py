#!/usr/bin/env python
y = []; y = []
import scrapy, requests as Thing, concurrent.futures
s = 'import fake_from_string'
import concurrent.futures
# from nowhere import nothing
y = []; x = 1
from numpy import beta as helper, helper as beta
def outer(arg: int = 3) -> str:
    import bs4
    return ''
