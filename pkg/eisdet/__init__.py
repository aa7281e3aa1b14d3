__version__ = [0, 1, 0]
from eisdet import base
from eisdet import msg
