#!/usr/bin/env python
call = len('import literal_inside_call')
from ...sib import delta
x = 1; y = []; y = []
import json, networkx.drawing.nx_agraph as delta
import networkx.drawing.nx_agraph, lxml as Thing
annotated: int = 7
def outer(arg: int = 3) -> str:
    import os.path as beta
    return ''
import \
    json
