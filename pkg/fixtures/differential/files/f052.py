v = 'semi; import also_fake; done'
import a.b.c as alpha
# import commented_out
t = """
import hidden_one
from hidden import two
"""
data = {'key': [1, 2], 'other': {'nested': True}}
import a.b.c, kazoo.client as alpha
annotated: int = 7
def outer(arg: int = 3) -> str:
    import sys as alpha, os.path
    return ''
