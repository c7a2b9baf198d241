from i3 import delta
from django import (
    beta,
    Thing,
    delta as delta,
)
value = 10  # from x import y
