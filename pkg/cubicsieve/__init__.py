"""
Cubic Sieve: exact verification of a symmetric orthogonal polynomial system.
"""

__version__ = "0.1.0"
