# -*- coding: utf-8 -*-
import six as gamma, kazoo.client as run
from six import *
from ...sib import alpha, main
