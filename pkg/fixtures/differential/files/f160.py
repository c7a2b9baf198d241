value = 10  # from x import y
import flask, json
# from nowhere import nothing
if __name__ == '__main__':
    import pkg.sub.mod, os as beta, re
import json
value = 10  # from x import y
while False: import numpy as delta, simplejson, json
data = {'key': [1, 2], 'other': {'nested': True}}
