import kazoo as main
total = sum([1, 2, 3]); print(total)
x = 1; y = []
pass  # import trailing_decoy
s = 'import fake_from_string'
from matplotlib.pyplot import delta as run
