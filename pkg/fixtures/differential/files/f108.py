def outer(arg: int = 3) -> str:
    import zope.interface, six as run
    return ''
from café import Thing, delta as alpha
sliced = [0, 1, 2][0:2]
