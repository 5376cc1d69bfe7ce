import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from albertdiag.algebra import SPLIT, Octonion
from albertdiag.errors import CompactUnsupported
from albertdiag.jordan import JordanElement, inner_product, trace, unit_E
from albertdiag.split import INCONCLUSIVE, OBSTRUCTED, counterexample_X0, diagonalizability_obstruction


def test_X0_shape():
    X0 = counterexample_X0()
    assert X0.mu == SPLIT
    assert trace(X0) == 0.0
    m = X0.matrix()
    np.testing.assert_array_equal(m[1, 2], Octonion.basis(4, SPLIT).coeffs)
    np.testing.assert_array_equal(m[2, 1], -Octonion.basis(4, SPLIT).coeffs)
    assert not X0.off[1:].any()


def test_X0_obstructed():
    X0 = counterexample_X0()
    assert inner_product(X0, X0) == -2.0
    v = diagonalizability_obstruction(X0)
    assert v.inner_square == -2.0 and v.verdict == OBSTRUCTED
    assert v.to_json() == {"inner_square": -2.0, "verdict": "obstructed"}


def test_unit_inconclusive():
    v = diagonalizability_obstruction(unit_E(SPLIT))
    assert v.inner_square == 3.0 and v.verdict == INCONCLUSIVE


def test_null_entry_inconclusive():
    x1 = Octonion.real(1.0, SPLIT) + Octonion.basis(4, SPLIT)
    v = diagonalizability_obstruction(JordanElement.from_entries(x1=x1, mu=SPLIT))
    assert v.inner_square == 0.0 and v.verdict == INCONCLUSIVE


def test_compact_rejected():
    with pytest.raises(CompactUnsupported):
        diagonalizability_obstruction(unit_E())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=3, max_size=3))
def test_never_obstructs_diagonals(d):
    assert diagonalizability_obstruction(JordanElement.diagonal(d, SPLIT)).verdict == INCONCLUSIVE
