from .xport import *
