y = f'import {1 + 1}'
# from nowhere import nothing
import \
    re
