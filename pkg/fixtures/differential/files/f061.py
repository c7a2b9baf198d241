x = {1: 'one', 2: 'two'}
def delta():
    import simplejson, functools
    return None
x = {1: 'one', 2: 'two'}
