"""
Concavity radius toolkit: sharp radii of concavity and their numerical verification
"""

__version__ = '1.0.0'
