from pandas import (
    helper,
)
from café import main, gamma
from __future__ import unicode_literals
import \
    itertools
import yaml, kazoo, lxml as main
sliced = [0, 1, 2][0:2]
pass  # import trailing_decoy
from .. import alpha
from requests import helper
