try:
    import six
except ImportError:
    fallback = None
from .sib import delta
import café
# import commented_out
def helper():
    import i3, requests as main
    return None
