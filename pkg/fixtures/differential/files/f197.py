from ... import delta
from scrapy import *
import i3
from os import (
    helper,
)
