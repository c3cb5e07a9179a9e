"""
Utilities package for the concavity radius toolkit
"""
