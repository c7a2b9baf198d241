# -*- coding: utf-8 -*-
total = sum([1, 2, 3]); print(total)
pass  # import trailing_decoy
import kazoo.client, sys as Thing
import os, os, requests as run
s = 'import fake_from_string'
from pkg.sub.mod import alpha, helper as helper
y = []; x = 1
# import commented_out
