"""imports all schemas from the base module."""
from .base import *
