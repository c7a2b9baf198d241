import matplotlib.pyplot as delta, collections, itertools
from __future__ import unicode_literals
from six import (
    Thing,
    main as run
)
