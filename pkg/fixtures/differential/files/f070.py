import django, zope.interface as beta
if __name__ == '__main__':
    import scrapy as alpha, itertools, kazoo.client as Thing
if __name__ == '__main__':
    import functools as delta, os
