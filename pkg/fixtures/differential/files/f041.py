value = 10  # from x import y
z = (1,
     2,
     3)
import kazoo.client as gamma, kazoo as run, zope.interface as helper
y = []; x = 1; x = 1
from os.path import alpha as helper, main as beta, delta, gamma as Thing
import \
    functools
