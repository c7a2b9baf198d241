u = '''from ghost import name'''
# import commented_out
from . import alpha, beta
from café \
    import gamma
import \
    café
import \
    café
# from nowhere import nothing
x = 1; import functools, os as helper; y = []
from functools import main
from functools import (
    main,
    beta,
    delta,
    gamma,
)
