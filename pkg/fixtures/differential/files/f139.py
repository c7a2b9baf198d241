w = r'\n import raw_decoy'
from ... import gamma, main
from a.b.c import (
    run,
)
print('plain output')
import zope.interface, café
with open('/dev/null') as handle:
    import café, a.b.c, kazoo as alpha
from flask import (
    delta,
    main as helper,
    Thing as helper,
    gamma
)
value = 10  # from x import y
x = {1: 'one', 2: 'two'}
