y = f'import {1 + 1}'
from ...sib import run, alpha
call = len('import literal_inside_call')
data = {'key': [1, 2], 'other': {'nested': True}}
from __future__ import unicode_literals
value = 10  # from x import y
total = sum([1, 2, 3]); print(total)
for i in range(1): import simplejson as helper, django, i3
import kazoo
pass  # import trailing_decoy
