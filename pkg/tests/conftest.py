"""
Shared fixtures for the PSL2 test suite.

Groups are built through the cached field constructors, so requesting the
same q from several tests costs one construction.
"""

import logging

import pytest

from src.config.settings import PSL2Settings
from src.groups.psl2 import GroupCtx, group_for_order
from src.oracle.enumeration import GroupTable, enumerate_group

_TABLES = {}


@pytest.fixture
def settings() -> PSL2Settings:
    """Settings with documented defaults, independent of the environment."""
    return PSL2Settings(_env_file=None)


@pytest.fixture
def psl2():
    """Factory returning PSL2(q) for a prime power q."""
    def build(q: int) -> GroupCtx:
        return group_for_order(q)
    return build


@pytest.fixture
def group_table():
    """Factory returning the enumerated PSL2(q), shared across tests."""
    def build(q: int) -> GroupTable:
        if q not in _TABLES:
            _TABLES[q] = enumerate_group(group_for_order(q))
        return _TABLES[q]
    return build


@pytest.fixture
def g5(psl2) -> GroupCtx:
    return psl2(5)


@pytest.fixture
def g7(psl2) -> GroupCtx:
    return psl2(7)


@pytest.fixture
def restore_root_logging():
    """Put the root logger's handlers and level back after a test reconfigures it."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield root
    root.handlers[:] = handlers
    root.setLevel(level)
