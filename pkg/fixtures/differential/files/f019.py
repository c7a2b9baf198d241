#!/usr/bin/env python
import café as alpha
import itertools as main, numpy as beta
import bs4, flask as helper
