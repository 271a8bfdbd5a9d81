"""Upper-triangular Toeplitz matrices over an additively idempotent semiring.

A matrix ``a_0 E + a_1 D + ... + a_{n-1} D^{n-1}`` is kept as its coefficient
vector, so the coefficient semiring never needs a zero.  The ``k``-th
coefficient of ``A X`` is ``sum_{i<=k} a_i * x_{k-i}`` with the left
operand's coefficient first in each product; over a non-commutative
coefficient semiring that order matters.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Any, Iterator

from .chain_core import Endo, SemiringError, SizeMismatch, format_rle, identity, parse_rle
from .simplex import all_types

__all__ = [
    "SemiringMismatch",
    "NotEnumerable",
    "IdempotentSemiring",
    "BooleanSemiring",
    "MaxPlusSemiring",
    "EndoSemiring",
    "semiring_from_selector",
    "ToeplitzMatrix",
    "t_add",
    "t_mul",
    "t_jordan",
    "t_jordan_coefficientwise",
    "delta",
    "t_leq",
    "unit_matrix",
    "iter_matrices",
    "iter_triples",
    "jordan_leibniz_check",
    "jordan_leibniz_scan",
    "ordinary_leibniz_sides",
    "ordinary_leibniz_witness",
    "one_sided_inequality_scan",
    "EXHAUSTIVE_LIMIT",
]

EXHAUSTIVE_LIMIT = 10**7


class SemiringMismatch(SemiringError):
    pass


class NotEnumerable(SemiringError):
    pass


class IdempotentSemiring:
    """Interface for coefficient semirings; ``a + a == a`` is assumed."""

    name: str = "abstract"
    commutative: bool = False

    def add(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def mul(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    @property
    def unit(self) -> Any | None:
        return None

    def elements(self) -> list[Any]:
        raise NotEnumerable(f"semiring {self.name} has no finite carrier")

    def format(self, a: Any) -> str:
        return str(a)

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def leq(self, a: Any, b: Any) -> bool:
        return self.add(a, b) == b

    def jordan(self, a: Any, b: Any) -> Any:
        return self.add(self.mul(a, b), self.mul(b, a))


@dataclass(frozen=True)
class BooleanSemiring(IdempotentSemiring):
    name: str = "bool"
    commutative: bool = True

    def add(self, a: int, b: int) -> int:
        return a | b

    def mul(self, a: int, b: int) -> int:
        return a & b

    @property
    def unit(self) -> int:
        return 1

    def elements(self) -> list[int]:
        return [0, 1]

    def parse(self, text: str) -> int:
        if text not in ("0", "1"):
            raise SemiringError(f"bad boolean {text!r}")
        return int(text)


@dataclass(frozen=True)
class MaxPlusSemiring(IdempotentSemiring):
    """``max`` and ``+`` on ``{-inf, 0, ..., M}``; the sum saturates at ``M``.

    ``bound=None`` gives the unbounded (non-enumerable) version on
    ``{-inf} | Z``.
    """

    bound: int | None = None
    commutative: bool = True

    @property
    def name(self) -> str:  # type: ignore[override]
        return "maxplus" if self.bound is None else f"maxplus:{self.bound}"

    def add(self, a: float, b: float) -> float:
        return max(a, b)

    def mul(self, a: float, b: float) -> float:
        s = a + b
        return s if self.bound is None or s == -math.inf else min(s, self.bound)

    @property
    def unit(self) -> int:
        return 0

    def elements(self) -> list[float]:
        if self.bound is None:
            raise NotEnumerable("unbounded max-plus semiring is infinite")
        return [-math.inf, *range(self.bound + 1)]

    def format(self, a: float) -> str:
        return "-inf" if a == -math.inf else str(int(a))

    def parse(self, text: str) -> float:
        if text.strip() == "-inf":
            return -math.inf
        v = int(text)
        if v < 0 or (self.bound is not None and v > self.bound):
            raise SemiringError(f"{v} outside max-plus carrier")
        return v


@dataclass(frozen=True)
class EndoSemiring(IdempotentSemiring):
    """All endomorphisms of ``C_m`` with max and left-first composition."""

    m: int = 3
    commutative: bool = False

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"endo:{self.m}"

    def add(self, a: Endo, b: Endo) -> Endo:
        return a + b

    def mul(self, a: Endo, b: Endo) -> Endo:
        return a * b

    @property
    def unit(self) -> Endo:
        return identity(self.m)

    def elements(self) -> list[Endo]:
        return all_types(self.m)

    def format(self, a: Endo) -> str:
        return format_rle(a)

    def parse(self, text: str) -> Endo:
        return parse_rle(text, self.m)


def semiring_from_selector(text: str) -> IdempotentSemiring:
    """``"bool"``, ``"maxplus:M"`` or ``"endo:m"``."""
    kind, _, arg = text.partition(":")
    try:
        if kind == "bool" and not arg:
            return BooleanSemiring()
        if kind == "maxplus":
            return MaxPlusSemiring(int(arg) if arg else None)
        if kind == "endo" and arg:
            return EndoSemiring(int(arg))
    except ValueError:
        pass
    raise SemiringError(f"unknown semiring selector {text!r}")


@dataclass(frozen=True)
class ToeplitzMatrix:
    semiring: IdempotentSemiring
    coeffs: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise SizeMismatch("a Toeplitz matrix needs at least one coefficient")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: ToeplitzMatrix) -> ToeplitzMatrix:
        return t_add(self, other)

    def __mul__(self, other: ToeplitzMatrix) -> ToeplitzMatrix:
        return t_mul(self, other)

    def to_json(self) -> list[str]:
        return [self.semiring.format(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, semiring: IdempotentSemiring, items: list[str]) -> ToeplitzMatrix:
        return cls(semiring, tuple(semiring.parse(s) for s in items))

    def __str__(self) -> str:
        return "[" + "; ".join(self.to_json()) + "]"


def _check(A: ToeplitzMatrix, B: ToeplitzMatrix) -> IdempotentSemiring:
    if A.semiring != B.semiring:
        raise SemiringMismatch(f"{A.semiring.name} vs {B.semiring.name}")
    if A.n != B.n:
        raise SizeMismatch(f"sizes differ: {A.n} vs {B.n}")
    return A.semiring


def t_add(A: ToeplitzMatrix, B: ToeplitzMatrix) -> ToeplitzMatrix:
    S = _check(A, B)
    return ToeplitzMatrix(S, tuple(S.add(a, b) for a, b in zip(A.coeffs, B.coeffs)))


def t_mul(A: ToeplitzMatrix, X: ToeplitzMatrix) -> ToeplitzMatrix:
    S = _check(A, X)
    a, x = A.coeffs, X.coeffs
    out = tuple(
        reduce(S.add, (S.mul(a[i], x[k - i]) for i in range(k + 1))) for k in range(A.n)
    )
    return ToeplitzMatrix(S, out)


def t_jordan(X: ToeplitzMatrix, A: ToeplitzMatrix) -> ToeplitzMatrix:
    """``X o A = A X + X A``."""
    return t_add(t_mul(A, X), t_mul(X, A))


def t_jordan_coefficientwise(X: ToeplitzMatrix, A: ToeplitzMatrix) -> ToeplitzMatrix:
    """Same product computed as ``sum_i x_i o a_{k-i}`` with ``o`` taken in the coefficients."""
    S = _check(X, A)
    x, a = X.coeffs, A.coeffs
    out = tuple(
        reduce(S.add, (S.jordan(x[i], a[k - i]) for i in range(k + 1))) for k in range(X.n)
    )
    return ToeplitzMatrix(S, out)


def delta(X: ToeplitzMatrix, A: ToeplitzMatrix) -> ToeplitzMatrix:
    return t_jordan(X, A)


def t_leq(A: ToeplitzMatrix, B: ToeplitzMatrix) -> bool:
    S = _check(A, B)
    return all(S.leq(a, b) for a, b in zip(A.coeffs, B.coeffs))


def unit_matrix(S: IdempotentSemiring, n: int) -> ToeplitzMatrix | None:
    """``E``; needs both a unit and a zero-free representation, so only ``n == 1``
    or semirings whose off-diagonal coefficient can be an additive identity."""
    u = S.unit
    if u is None:
        return None
    if n == 1:
        return ToeplitzMatrix(S, (u,))
    zero = _additive_identity(S)
    if zero is None:
        return None
    return ToeplitzMatrix(S, (u,) + (zero,) * (n - 1))


def _additive_identity(S: IdempotentSemiring) -> Any | None:
    try:
        els = S.elements()
    except NotEnumerable:
        return -math.inf if isinstance(S, MaxPlusSemiring) else None
    for z in els:
        if all(S.add(z, e) == e for e in els):
            return z
    return None


def iter_matrices(S: IdempotentSemiring, n: int) -> Iterator[ToeplitzMatrix]:
    for coeffs in product(S.elements(), repeat=n):
        yield ToeplitzMatrix(S, coeffs)


def iter_triples(
    S: IdempotentSemiring, n: int, *, samples: int = 20000, seed: int = 0,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> tuple[bool, Iterator[tuple[ToeplitzMatrix, ToeplitzMatrix, ToeplitzMatrix]]]:
    """Exhaustive lexicographic triples when ``|S|^(3n) <= exhaustive_limit``,
    otherwise ``samples`` seeded random triples.  Returns ``(exhaustive, iterator)``."""
    els = S.elements()
    if len(els) ** (3 * n) <= exhaustive_limit:
        mats = list(iter_matrices(S, n))
        return True, (
            (X, A, B) for X in mats for A in mats for B in mats
        )
    rng = random.Random(seed)

    def sampled():
        for _ in range(samples):
            yield tuple(
                ToeplitzMatrix(S, tuple(rng.choice(els) for _ in range(n))) for _ in range(3)
            )

    return False, sampled()


def _triple_json(X, A, B) -> dict:
    return {"X": X.to_json(), "A": A.to_json(), "B": B.to_json()}


def jordan_leibniz_check(
    X: ToeplitzMatrix, A: ToeplitzMatrix, B: ToeplitzMatrix
) -> tuple[bool, dict | None]:
    """``d_X(A o B) == d_X(A) o B + A o d_X(B)``."""
    lhs = delta(X, t_jordan(A, B))
    rhs = t_add(t_jordan(delta(X, A), B), t_jordan(A, delta(X, B)))
    if lhs == rhs:
        return True, None
    return False, {**_triple_json(X, A, B), "lhs": lhs.to_json(), "rhs": rhs.to_json()}


def jordan_leibniz_scan(
    S: IdempotentSemiring, n: int, *, max_witnesses: int | None = 20, samples: int = 20000,
    seed: int = 0, exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> dict:
    exhaustive, triples = iter_triples(
        S, n, samples=samples, seed=seed, exhaustive_limit=exhaustive_limit
    )
    total = failures = 0
    witnesses = []
    for X, A, B in triples:
        total += 1
        ok, w = jordan_leibniz_check(X, A, B)
        if not ok:
            failures += 1
            if max_witnesses is None or len(witnesses) < max_witnesses:
                witnesses.append(w)
    return {
        "semiring": S.name,
        "n": n,
        "exhaustive": exhaustive,
        "triples": total,
        "failures": failures,
        "witnesses": witnesses,
    }


def ordinary_leibniz_sides(
    X: ToeplitzMatrix, A: ToeplitzMatrix, B: ToeplitzMatrix
) -> tuple[ToeplitzMatrix, ToeplitzMatrix]:
    """``(d_X(AB), d_X(A) B + A d_X(B))``."""
    lhs = delta(X, t_mul(A, B))
    rhs = t_add(t_mul(delta(X, A), B), t_mul(A, delta(X, B)))
    return lhs, rhs


def ordinary_leibniz_witness(S: IdempotentSemiring, n: int) -> dict | None:
    """First ``(X, A, B)`` in lexicographic order breaking the ordinary Leibniz rule.

    Returns ``None`` when the whole carrier is exhausted without one.
    """
    mats = list(iter_matrices(S, n))
    for X in mats:
        for A in mats:
            for B in mats:
                lhs, rhs = ordinary_leibniz_sides(X, A, B)
                if lhs != rhs:
                    return {
                        **_triple_json(X, A, B),
                        "lhs": lhs.to_json(),
                        "rhs": rhs.to_json(),
                        "lhs_below_rhs": t_leq(lhs, rhs),
                    }
    return None


def one_sided_inequality_scan(
    S: IdempotentSemiring, n: int, *, samples: int = 20000, seed: int = 0,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> dict:
    """Check ``d_X(AB) <= d_X(A) B + A d_X(B)`` and count strict cases."""
    exhaustive, triples = iter_triples(
        S, n, samples=samples, seed=seed, exhaustive_limit=exhaustive_limit
    )
    total = strict = 0
    counterexample = None
    for X, A, B in triples:
        total += 1
        lhs, rhs = ordinary_leibniz_sides(X, A, B)
        if not t_leq(lhs, rhs):
            counterexample = {**_triple_json(X, A, B), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
            break
        if lhs != rhs:
            strict += 1
    return {
        "semiring": S.name,
        "n": n,
        "exhaustive": exhaustive,
        "triples": total,
        "strict": strict,
        "holds": counterexample is None,
        "counterexample": counterexample,
    }
