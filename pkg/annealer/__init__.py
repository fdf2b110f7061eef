from .annealer import *
