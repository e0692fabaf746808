"""
Conjugacy classes, class squares and generation certificates in PSL2(q).
"""

__version__ = "1.0.0"
