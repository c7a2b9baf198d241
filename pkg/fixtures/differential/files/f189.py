from os \
    import Thing
class Wrapper:
    import kazoo.client, i3 as alpha
    def method(self):
        import kazoo.client, i3 as alpha
from __future__ import print_function
