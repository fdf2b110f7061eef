from .plotter import *
