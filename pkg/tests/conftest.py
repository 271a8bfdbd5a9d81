from __future__ import annotations

import pytest
from hypothesis import strategies as st

from semiderive.chain_core import Endo
from semiderive.simplex import SimplexSpec

TRI3 = SimplexSpec(3, (0, 1, 2))
TRI7 = SimplexSpec(7, (1, 3, 5))
TET8 = SimplexSpec(8, (1, 3, 5, 7))


def endos(n: int) -> st.SearchStrategy[Endo]:
    """Monotone maps of C_n as sorted value lists."""
    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(
        lambda v: Endo(tuple(sorted(v)))
    )


@pytest.fixture
def tri7() -> SimplexSpec:
    return TRI7
