from sys import (
    main,
    alpha as run,
    helper,
)
import \
    flask
from networkx.drawing.nx_agraph import Thing
total = sum([1, 2, 3]); print(total)
