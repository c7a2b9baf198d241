from re import helper, main as delta, alpha
from scrapy import gamma as gamma, main, beta as helper, alpha
import json
value = 10  # from x import y
import sys as beta; x = 1
