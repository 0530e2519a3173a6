"""C2 identification, canonization and inversion"""

__version__ = "0.1.0"
