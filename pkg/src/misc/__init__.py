"""
Consoles and timing helpers.
"""

from .console import *
from .logger import *
