#!/usr/bin/env python
import xml.etree.ElementTree, kazoo as beta, kazoo.client as alpha; y = []
annotated: int = 7
z = (1,
     2,
     3)
