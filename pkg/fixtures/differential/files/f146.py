s = "from fake import nothing"
import networkx.drawing.nx_agraph, flask
import pandas, json
from requests import *
annotated: int = 7
x = 1; y = []; import os as run, six
from re import *
s = 'import fake_from_string'
