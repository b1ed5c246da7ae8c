from .cost import *
from .report import *
from .bench import *
