from .runner import *
