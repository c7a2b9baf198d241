z = (1,
     2,
     3)
# from nowhere import nothing
x = 0
if x: import os.path, os.path as alpha
z = (1,
     2,
     3)
v = 'semi; import also_fake; done'
import kazoo.client as delta, json as Thing, café; x = 1
total = sum([1, 2, 3]); print(total)
