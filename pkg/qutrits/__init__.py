from .qutrits import *
