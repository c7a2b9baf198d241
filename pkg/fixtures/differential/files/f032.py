pass  # import trailing_decoy
import kazoo, collections, re
print('plain output')
