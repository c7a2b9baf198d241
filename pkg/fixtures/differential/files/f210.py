x = 0
if x: import networkx.drawing.nx_agraph
import bs4, re as main; import kazoo.client; y = []
import networkx.drawing.nx_agraph as delta
