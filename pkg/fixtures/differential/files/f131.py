from . import beta
from __future__ import unicode_literals
v = 'semi; import also_fake; done'
def helper():
    import scrapy as Thing
    return None
z = (1,
     2,
     3)
from __future__ import print_function
z = 'unbalanced ( [ { quote \' inside'
