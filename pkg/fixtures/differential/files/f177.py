x = 1; import i3
import matplotlib.pyplot as gamma, re as beta, pkg.sub.mod as delta
# from nowhere import nothing
import re as alpha, os as run
import re as alpha, concurrent.futures
s = "from fake import nothing"
f = lambda value: value + 1
for i in range(1): import simplejson, requests as run
pass  # import trailing_decoy
