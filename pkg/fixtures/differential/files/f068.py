#!/usr/bin/env python
s = 'import fake_from_string'
sliced = [0, 1, 2][0:2]
s = "from fake import nothing"
