#!/usr/bin/env python
import pandas, yaml as gamma, matplotlib.pyplot
import requests
u = '''from ghost import name'''
