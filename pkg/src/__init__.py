"""Command-algebra file synchronizer"""
__version__ = "1.0.0"
