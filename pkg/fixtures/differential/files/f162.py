s = "from fake import nothing"
import numpy as beta, concurrent.futures
import six as helper, json as main, xml.etree.ElementTree as helper
from ...sib import alpha, run
