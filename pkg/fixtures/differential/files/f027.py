from requests import (
    beta as alpha
)
import lxml, re
import matplotlib.pyplot as run
# import commented_out
q = "colon: import colon_decoy"
import os.path, pandas, pkg.sub.mod as Thing
sliced = [0, 1, 2][0:2]
u = '''from ghost import name'''
class Wrapper:
    import json, scrapy as helper, xml.etree.ElementTree
    def method(self):
        import json, scrapy as helper, xml.etree.ElementTree
