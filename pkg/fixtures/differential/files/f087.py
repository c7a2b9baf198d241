with open('/dev/null') as handle:
    import itertools as helper
pass  # import trailing_decoy
from yaml import (
    run,
    beta as Thing,
    Thing,
)
from bs4 import (
    delta,
    Thing,
    beta as run
)
s = 'import fake_from_string'
