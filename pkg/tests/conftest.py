from __future__ import annotations

import pytest

from actorkit import catalog


@pytest.fixture(scope="session")
def small_catalog():
    return catalog.builtin_catalog(6)


@pytest.fixture(scope="session")
def S3():
    return catalog.get("S3")
