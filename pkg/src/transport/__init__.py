from .exchange import *
from .network import *
