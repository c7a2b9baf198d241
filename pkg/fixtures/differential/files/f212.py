# -*- coding: utf-8 -*-
from zope.interface import (
    helper,
    main as beta,
    beta,
    run,
)
from requests import (
    delta,
    run
)
from .sib import helper, alpha
s = 'import fake_from_string'
from os.path import main, beta, Thing, delta
