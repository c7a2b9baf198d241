f = lambda value: value + 1
data = {'key': [1, 2], 'other': {'nested': True}}
z = (1,
     2,
     3)
import zope.interface as Thing, i3
with open('/dev/null') as handle:
    import six as delta
x = b'import byte_decoy'
