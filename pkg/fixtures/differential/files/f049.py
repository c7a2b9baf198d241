# -*- coding: utf-8 -*-
x = 1; import six as alpha, os.path; x = 1
pass  # import trailing_decoy
import pandas as Thing, matplotlib.pyplot as run
from __future__ import unicode_literals
if __name__ == '__main__':
    import os
y = []; x = 1
with open('/dev/null') as handle:
    import matplotlib.pyplot
from __future__ import unicode_literals
