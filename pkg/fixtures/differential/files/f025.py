v = 'semi; import also_fake; done'
from ..helpers import helper, run
from ...helpers import helper
data = {'key': [1, 2], 'other': {'nested': True}}
from matplotlib.pyplot import helper, Thing as alpha, run, delta as gamma
import requests
