annotated: int = 7
from pandas import gamma, run as delta, alpha as Thing, main
import café
from ... import Thing, gamma
import pkg.sub.mod, os.path
from flask import (
    helper as main,
    main as alpha,
    beta,
)
import kazoo as alpha; y = []
value = 10  # from x import y
