# -*- coding: utf-8 -*-
from . import run
import requests, functools, kazoo.client as gamma
q = "colon: import colon_decoy"
import functools, itertools
import xml.etree.ElementTree, café as run, six
from a.b.c import beta, delta, main as main
