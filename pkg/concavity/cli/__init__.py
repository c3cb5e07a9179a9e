"""
Command-line surface: radius, scan, verify, grid, witness-test
"""

from .app import build_parser, main

__all__ = ['build_parser', 'main']
