"""imports all domain models."""
from .topology import *
from .blocks import *
from .reducer import *
from .state import *
