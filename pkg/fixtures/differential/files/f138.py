w = r'\n import raw_decoy'
from sys import run, helper, main, gamma
from bs4 \
    import main
