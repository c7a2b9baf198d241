import kazoo.client
q = "colon: import colon_decoy"
import os
from os.path import (
    delta as beta,
)
from __future__ import division
from pandas import Thing as gamma
