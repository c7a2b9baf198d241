#!/usr/bin/env python
import numpy, pandas; x = 1
f = lambda value: value + 1
print('plain output')
class Wrapper:
    import pandas
    def method(self):
        import pandas
