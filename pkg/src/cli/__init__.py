"""
Command-line front end; the entry point is src.cli.main:main.
"""

from .selectors import resolve_selector, valid_selectors

__all__ = ['resolve_selector', 'valid_selectors']
