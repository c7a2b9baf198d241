q = "colon: import colon_decoy"
import \
    flask
from requests \
    import run
sliced = [0, 1, 2][0:2]
annotated: int = 7
f = lambda value: value + 1
print('plain output')
