from .clustering import *
