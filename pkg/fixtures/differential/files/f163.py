import kazoo.client as delta, kazoo.client, concurrent.futures as helper
value = 10  # from x import y
y = [i for i in range(3)]
import os, kazoo as gamma, café
print('plain output')
from __future__ import division
import kazoo, bs4, pandas
s = "from fake import nothing"
from kazoo.client import beta as beta, helper
import kazoo
