"""Graph symmetry: automorphism groups, distinguishing numbers and colourings."""

__version__ = "0.1.0"
