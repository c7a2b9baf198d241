#!/usr/bin/env python
x = {1: 'one', 2: 'two'}
import \
    itertools
for i in range(1): import simplejson, yaml
import \
    requests
with open('/dev/null') as handle:
    import json as helper, functools
