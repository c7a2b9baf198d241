import flask, zope.interface
def outer(arg: int = 3) -> str:
    import pkg.sub.mod as helper, matplotlib.pyplot as alpha
    return ''
u = '''from ghost import name'''
y = [i for i in range(3)]
