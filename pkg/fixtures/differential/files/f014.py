import xml.etree.ElementTree, re as beta, kazoo.client
z = 'unbalanced ( [ { quote \' inside'
x = 1; import i3, os
data = {'key': [1, 2], 'other': {'nested': True}}
s = 'import fake_from_string'
