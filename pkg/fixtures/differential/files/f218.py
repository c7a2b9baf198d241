y = f'import {1 + 1}'
import matplotlib.pyplot
try:
    import pkg.sub.mod
except ImportError:
    fallback = None
