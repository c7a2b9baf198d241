#!/usr/bin/env python
# -*- coding: utf-8 -*-
if True: import json
from os import Thing as beta
sliced = [0, 1, 2][0:2]
