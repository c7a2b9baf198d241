# from nowhere import nothing
try:
    import concurrent.futures, pkg.sub.mod
except ImportError:
    fallback = None
data = {'key': [1, 2], 'other': {'nested': True}}
from kazoo.client import main, Thing
def outer(arg: int = 3) -> str:
    import café
    return ''
print('plain output')
def beta():
    import json, pkg.sub.mod
    return None
import i3, os.path as beta
