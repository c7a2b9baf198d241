import networkx.drawing.nx_agraph, a.b.c
# import commented_out
from lxml import main as Thing, run, Thing, alpha as run
