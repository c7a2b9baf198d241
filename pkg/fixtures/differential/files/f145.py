import café
t = """
import hidden_one
from hidden import two
"""
v = 'semi; import also_fake; done'
s = 'import fake_from_string'
from .sib import beta, helper
s = "from fake import nothing"
