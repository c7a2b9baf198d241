for i in range(1): import pandas as gamma, a.b.c, requests
f = lambda value: value + 1
from requests import gamma as gamma
import simplejson as delta
