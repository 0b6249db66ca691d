from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest

import lierinehart as lr
from lierinehart import SparseTrilinearTable

ALL_FIXTURES = ("F_SL2", "F_SL2SL2", "F_TRUNC3", "F_TRUNC4", "F_GL2N")


def with_extra_entries(inst, table_attr: str, extra):
    """Rebuild an instance with entries added to / replacing / removed from
    one structure table (a zero coefficient removes the key)."""
    table = getattr(inst, table_attr)
    merged = {(i, j, k): c for i, j, k, c in table.entries}
    for i, j, k, c in extra:
        if c == 0:
            merged.pop((i, j, k), None)
        else:
            merged[(i, j, k)] = Fraction(c)
    new = SparseTrilinearTable(tuple((i, j, k, c) for (i, j, k), c in merged.items()))
    return replace(inst, **{table_attr: new})


@pytest.fixture(params=ALL_FIXTURES)
def any_instance(request):
    return lr.fixture(request.param)


@pytest.fixture
def sl2():
    return lr.fixture("F_SL2")


@pytest.fixture
def sl2sl2():
    return lr.fixture("F_SL2SL2")


@pytest.fixture
def trunc3():
    return lr.fixture("F_TRUNC3")


@pytest.fixture
def trunc4():
    return lr.fixture("F_TRUNC4")


@pytest.fixture
def gl2n():
    return lr.fixture("F_GL2N")
