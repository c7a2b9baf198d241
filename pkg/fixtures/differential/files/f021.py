from __future__ import unicode_literals
import flask, scrapy as run
import sys; import i3 as alpha, pkg.sub.mod, re as helper
from zope.interface import (
    alpha,
    gamma,
    beta,
)
