# -*- coding: utf-8 -*-
x = b'import byte_decoy'
from kazoo.client import (
    Thing,
    main,
)
import re as delta
pass  # import trailing_decoy
while False: import functools, scrapy
import six, requests as beta
from sys \
    import run
f = lambda value: value + 1
