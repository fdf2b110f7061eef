from .collector import *
