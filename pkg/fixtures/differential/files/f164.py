def delta():
    import itertools as main, lxml, collections
    return None
# import commented_out
w = r'\n import raw_decoy'
import zope.interface
x = 1; import xml.etree.ElementTree
s = 'import fake_from_string'
print('plain output')
q = "colon: import colon_decoy"
