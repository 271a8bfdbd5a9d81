from __future__ import annotations

import math
import random
from functools import reduce
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from semiderive.chain_core import SemiringError, SizeMismatch, constant, parse_values
from semiderive.simplex import all_types
from semiderive.toeplitz import (
    BooleanSemiring,
    EndoSemiring,
    MaxPlusSemiring,
    NotEnumerable,
    SemiringMismatch,
    ToeplitzMatrix,
    delta,
    iter_triples,
    jordan_leibniz_check,
    jordan_leibniz_scan,
    one_sided_inequality_scan,
    ordinary_leibniz_sides,
    ordinary_leibniz_witness,
    semiring_from_selector,
    t_add,
    t_jordan,
    t_jordan_coefficientwise,
    t_leq,
    t_mul,
    unit_matrix,
)

ZERO = object()  # formal zero for the entries below the diagonal


def dense(A: ToeplitzMatrix):
    n = A.n
    return [[A.coeffs[j - i] if j >= i else ZERO for j in range(n)] for i in range(n)]


def dense_mul(S, P, Q):
    n = len(P)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = [S.mul(P[i][k], Q[k][j]) for k in range(n) if P[i][k] is not ZERO and Q[k][j] is not ZERO]
            row.append(reduce(S.add, terms) if terms else ZERO)
        out.append(row)
    return out


def from_dense(S, M):
    n = len(M)
    for i in range(n):
        for j in range(n):
            assert (M[i][j] is ZERO) == (j < i)
            if j >= i:
                assert M[i][j] == M[0][j - i]
    return ToeplitzMatrix(S, tuple(M[0]))


def mats(S, n):
    return st.tuples(*[st.sampled_from(S.elements())] * n).map(lambda c: ToeplitzMatrix(S, c))


SEMIRINGS = [BooleanSemiring(), MaxPlusSemiring(3), EndoSemiring(3)]


@pytest.mark.parametrize("S", SEMIRINGS, ids=lambda s: s.name)
def test_product_matches_explicit_matrices(S):
    for n in (1, 2, 3):
        rng = random.Random(n)
        els = S.elements()
        for _ in range(40):
            A = ToeplitzMatrix(S, tuple(rng.choice(els) for _ in range(n)))
            X = ToeplitzMatrix(S, tuple(rng.choice(els) for _ in range(n)))
            assert t_mul(A, X) == from_dense(S, dense_mul(S, dense(A), dense(X)))


def test_add_examples():
    B = BooleanSemiring()
    assert t_add(ToeplitzMatrix(B, (1, 0)), ToeplitzMatrix(B, (0, 1))).coeffs == (1, 1)
    M = MaxPlusSemiring()
    assert t_add(ToeplitzMatrix(M, (0, 2, 1)), ToeplitzMatrix(M, (1, 1, 1))).coeffs == (1, 2, 1)
    A = ToeplitzMatrix(M, (0, 2, 1))
    assert A + A == A


def test_mul_examples():
    B = BooleanSemiring()
    assert t_mul(ToeplitzMatrix(B, (0, 1)), ToeplitzMatrix(B, (1, 0))).coeffs == (0, 1)
    E = EndoSemiring(3)
    A = ToeplitzMatrix(E, (constant(3, 1),))
    X = ToeplitzMatrix(E, (parse_values("0,2,2"),))
    assert t_mul(A, X).coeffs == (constant(3, 2),)
    assert t_mul(X, A).coeffs == (constant(3, 1),)


def test_unit_matrix_is_neutral():
    for S in (BooleanSemiring(), MaxPlusSemiring(3)):
        U = unit_matrix(S, 3)
        for c in product(S.elements(), repeat=3):
            X = ToeplitzMatrix(S, c)
            assert t_mul(U, X) == X == t_mul(X, U)


def test_jordan_examples():
    B = BooleanSemiring()
    X, A = ToeplitzMatrix(B, (1, 0)), ToeplitzMatrix(B, (0, 1))
    assert t_jordan(X, A).coeffs == (0, 1) == t_jordan_coefficientwise(X, A).coeffs
    E = EndoSemiring(3)
    one = ToeplitzMatrix(E, (constant(3, 1),))
    x = ToeplitzMatrix(E, (parse_values("0,2,2"),))
    assert t_jordan(one, x).coeffs == (constant(3, 2),)
    assert delta(x, one) == t_jordan(x, one)


@settings(max_examples=150)
@given(mats(EndoSemiring(3), 3), mats(EndoSemiring(3), 3))
def test_jordan_matches_coefficientwise_formula(X, A):
    assert t_jordan(X, A) == t_jordan_coefficientwise(X, A)


@settings(max_examples=100)
@given(mats(EndoSemiring(2), 2), mats(EndoSemiring(2), 2), mats(EndoSemiring(2), 2))
def test_matrix_semiring_laws(A, B, C):
    assert t_mul(t_mul(A, B), C) == t_mul(A, t_mul(B, C))
    assert t_mul(A, t_add(B, C)) == t_add(t_mul(A, B), t_mul(A, C))
    assert t_mul(t_add(B, C), A) == t_add(t_mul(B, A), t_mul(C, A))


def test_boolean_jordan_leibniz_exhaustive():
    r = jordan_leibniz_scan(BooleanSemiring(), 2)
    assert r["exhaustive"] and r["triples"] == 64 and r["failures"] == 0
    X = ToeplitzMatrix(BooleanSemiring(), (1, 1))
    assert jordan_leibniz_check(X, X, X)[0]


def test_endo_jordan_leibniz_is_reported_deterministically():
    r1 = jordan_leibniz_scan(EndoSemiring(3), 1)
    r2 = jordan_leibniz_scan(EndoSemiring(3), 1)
    assert r1 == r2 and r1["triples"] == 1000 and r1["exhaustive"]


def test_ordinary_witnesses():
    assert ordinary_leibniz_witness(BooleanSemiring(), 2) is None
    w = ordinary_leibniz_witness(EndoSemiring(3), 1)
    assert w is not None and w["lhs"] != w["rhs"]
    S = EndoSemiring(3)
    X, A, B = (ToeplitzMatrix.from_json(S, w[k]) for k in "XAB")
    lhs, rhs = ordinary_leibniz_sides(X, A, B)
    assert lhs.to_json() == w["lhs"] and rhs.to_json() == w["rhs"]


def test_specific_triple_is_strictly_below():
    S = EndoSemiring(3)
    A = ToeplitzMatrix(S, (constant(3, 1),))
    X = ToeplitzMatrix(S, (parse_values("0,2,2"),))
    B = ToeplitzMatrix(S, (parse_values("0,0,2"),))
    lhs, rhs = ordinary_leibniz_sides(X, A, B)
    assert t_leq(lhs, rhs) and lhs != rhs


def test_one_sided_inequality():
    for S, n in ((BooleanSemiring(), 2), (MaxPlusSemiring(2), 2), (EndoSemiring(3), 1)):
        r = one_sided_inequality_scan(S, n)
        assert r["exhaustive"] and r["holds"]


def test_sampling_switch():
    exhaustive, it = iter_triples(EndoSemiring(3), 2, samples=5, seed=1, exhaustive_limit=100)
    assert not exhaustive and len(list(it)) == 5
    _, again = iter_triples(EndoSemiring(3), 2, samples=5, seed=1, exhaustive_limit=100)
    _, first = iter_triples(EndoSemiring(3), 2, samples=5, seed=1, exhaustive_limit=100)
    assert list(again) == list(first)


def test_maxplus_saturates_and_absorbs():
    M = MaxPlusSemiring(2)
    assert M.mul(2, 1) == 2 and M.mul(-math.inf, 2) == -math.inf
    assert M.elements() == [-math.inf, 0, 1, 2]
    with pytest.raises(NotEnumerable):
        MaxPlusSemiring().elements()


def test_selectors():
    assert semiring_from_selector("bool") == BooleanSemiring()
    assert semiring_from_selector("maxplus:4") == MaxPlusSemiring(4)
    assert semiring_from_selector("endo:3").elements() == all_types(3)
    for bad in ("boolean", "endo", "maxplus:x", "endo:"):
        with pytest.raises(SemiringError):
            semiring_from_selector(bad)


def test_mismatches():
    A = ToeplitzMatrix(BooleanSemiring(), (1,))
    with pytest.raises(SemiringMismatch):
        t_add(A, ToeplitzMatrix(MaxPlusSemiring(2), (1,)))
    with pytest.raises(SizeMismatch):
        t_mul(A, ToeplitzMatrix(BooleanSemiring(), (1, 0)))


def test_json_round_trip():
    S = EndoSemiring(3)
    A = ToeplitzMatrix(S, (constant(3, 1), parse_values("0,2,2")))
    assert ToeplitzMatrix.from_json(S, A.to_json()) == A
    M = MaxPlusSemiring(2)
    B = ToeplitzMatrix(M, (-math.inf, 2))
    assert B.to_json() == ["-inf", "2"] and ToeplitzMatrix.from_json(M, B.to_json()) == B
