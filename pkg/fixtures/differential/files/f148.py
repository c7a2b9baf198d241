class Wrapper:
    import i3 as run, zope.interface, kazoo
    def method(self):
        from lxml import run, gamma, alpha as main
y = [i for i in range(3)]
from lxml import alpha as gamma, delta, run, gamma as main
