from .hamiltonians import *
