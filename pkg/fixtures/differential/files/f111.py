# -*- coding: utf-8 -*-
import \
    os
# from nowhere import nothing
z = 'unbalanced ( [ { quote \' inside'
value = 10  # from x import y
value = 10  # from x import y
value = 10  # from x import y
import os.path
import \
    six
# from nowhere import nothing
u = '''from ghost import name'''
