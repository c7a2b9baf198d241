#!/usr/bin/env python
from bs4 import *
import functools
import sys
