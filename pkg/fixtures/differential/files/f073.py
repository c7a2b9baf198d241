u = '''from ghost import name'''
z = 'unbalanced ( [ { quote \' inside'
from collections import (
    helper,
    beta
)
