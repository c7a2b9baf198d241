#!/usr/bin/env python
import lxml as alpha, functools, simplejson
import zope.interface, six, json
x = b'import byte_decoy'
import \
    simplejson
if __name__ == '__main__':
    import json as alpha
import bs4
import \
    requests
y = f'import {1 + 1}'
q = "colon: import colon_decoy"
from pkg.sub.mod import (
    beta,
    main,
    Thing,
    alpha,
)
