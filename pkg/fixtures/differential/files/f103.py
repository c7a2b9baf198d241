call = len('import literal_inside_call')
from networkx.drawing.nx_agraph import delta as main, helper as alpha
pass  # import trailing_decoy
import pkg.sub.mod as gamma, zope.interface as alpha
# import commented_out
s = 'import fake_from_string'
y = f'import {1 + 1}'
data = {'key': [1, 2], 'other': {'nested': True}}
