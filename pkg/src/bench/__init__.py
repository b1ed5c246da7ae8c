from .sweep import *
from .verify import *
