z = 'unbalanced ( [ { quote \' inside'
from json import (
    gamma as Thing,
    helper,
    alpha as helper
)
from simplejson import main, gamma
