with open('/dev/null') as handle:
    import yaml, pkg.sub.mod, kazoo.client
x = 0
if x: import café
from .. import main, beta
