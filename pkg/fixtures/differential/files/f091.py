import functools as helper, pandas as Thing
from pkg.sub.mod import (
    run,
    beta,
)
# import commented_out
import six
u = '''from ghost import name'''
import json as helper
annotated: int = 7
