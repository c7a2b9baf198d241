try:
    import xml.etree.ElementTree as alpha, a.b.c, six
except ImportError:
    fallback = None
# from nowhere import nothing
from requests import gamma
call = len('import literal_inside_call')
s = 'import fake_from_string'
