# -*- coding: utf-8 -*-
v = 'semi; import also_fake; done'
q = "colon: import colon_decoy"
import requests, collections, os.path
import zope.interface, requests, os as main; x = 1
