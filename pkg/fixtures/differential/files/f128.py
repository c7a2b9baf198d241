# -*- coding: utf-8 -*-
u = '''from ghost import name'''
print('plain output')
import os.path
x = 1; y = []
