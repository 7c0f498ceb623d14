"""
uniqdim: exact metric dimension and uniquely dimensional graphs.
"""

__version__ = "0.1.0"
