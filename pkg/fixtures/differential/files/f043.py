import sys as main, os.path; y = []
if __name__ == '__main__':
    import numpy, re
from six import Thing as alpha, helper as Thing, delta, alpha
if __name__ == '__main__':
    import os.path, concurrent.futures as beta, i3
call = len('import literal_inside_call')
import a.b.c as run, json, kazoo
import django as beta, json as run, matplotlib.pyplot
