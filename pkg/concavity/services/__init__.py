"""
Numerical services: jets, concavity functionals, radius solvers, witnesses and verification
"""
