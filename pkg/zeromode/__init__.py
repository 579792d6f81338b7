"""
Init file for zeromode
"""
__version__ = "1.0"
