annotated: int = 7
import café, numpy
if __name__ == '__main__':
    import re
