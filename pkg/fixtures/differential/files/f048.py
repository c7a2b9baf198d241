from six import beta as main
while False: import functools, simplejson
if __name__ == '__main__':
    import zope.interface
u = '''from ghost import name'''
import \
    itertools
print('plain output')
