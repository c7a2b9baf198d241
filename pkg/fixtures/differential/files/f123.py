# -*- coding: utf-8 -*-
s = "from fake import nothing"
y = []; y = []
w = r'\n import raw_decoy'
