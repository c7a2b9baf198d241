x = b'import byte_decoy'
pass  # import trailing_decoy
try:
    import sys
except ImportError:
    fallback = None
sliced = [0, 1, 2][0:2]
from a.b.c import beta
z = 'unbalanced ( [ { quote \' inside'
annotated: int = 7
def outer(arg: int = 3) -> str:
    import itertools, pandas
    return ''
