# -*- coding: utf-8 -*-
from __future__ import print_function
import simplejson
from collections import (
    gamma as beta
)
if True: import xml.etree.ElementTree, os as Thing
from networkx.drawing.nx_agraph import (
    run,
    alpha as beta,
    gamma as delta
)
import collections, pkg.sub.mod; import café as main, kazoo.client as beta, zope.interface as helper
