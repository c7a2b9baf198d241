# -*- coding: utf-8 -*-
x = 1; y = []; x = 1
import django
import flask
