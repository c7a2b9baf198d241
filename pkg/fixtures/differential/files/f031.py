from kazoo.client import helper as gamma, gamma as delta
t = """
import hidden_one
from hidden import two
"""
pass  # import trailing_decoy
