z = 'unbalanced ( [ { quote \' inside'
print('plain output')
import i3, collections, os as Thing
annotated: int = 7
s = 'import fake_from_string'
# from nowhere import nothing
from café import (
    helper,
    Thing,
)
import re, pkg.sub.mod as main
