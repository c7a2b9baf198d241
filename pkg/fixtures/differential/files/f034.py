import lxml, kazoo
import six, concurrent.futures
from kazoo import (
    main,
    beta,
    gamma,
)
