value = 10  # from x import y
def outer(arg: int = 3) -> str:
    import concurrent.futures
    return ''
import flask, matplotlib.pyplot, scrapy
from kazoo.client import delta, Thing as Thing, main
from __future__ import unicode_literals
if __name__ == '__main__':
    import os.path, os.path as gamma
sliced = [0, 1, 2][0:2]
from pkg.sub.mod import delta, helper, Thing as gamma
