from os import main, delta
from six \
    import Thing
import kazoo, kazoo as main, simplejson as beta; x = 1; y = []
f = lambda value: value + 1
