print('plain output')
try:
    import kazoo.client, numpy, re
except ImportError:
    fallback = None
if __name__ == '__main__':
    import kazoo.client
total = sum([1, 2, 3]); print(total)
import pandas, café
annotated: int = 7
v = 'semi; import also_fake; done'
q = "colon: import colon_decoy"
q = "colon: import colon_decoy"
