from collections \
    import Thing
from __future__ import division
from . import gamma
