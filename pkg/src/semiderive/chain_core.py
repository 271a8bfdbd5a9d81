"""Endomorphisms of a finite chain and their semiring arithmetic.

An endomorphism of ``C_n = ({0, ..., n-1}, max)`` is a monotone map, stored
as its value vector.  Addition is the pointwise maximum.  Multiplication
applies the LEFT factor first::

    (f * g)(x) == g(f(x))

Under this order an element fixing every vertex of a simplex is a right
identity (``alpha * eps == alpha``) and same-type elements agree after a
right identity (``g * alpha == g * beta``).  The textbook ``f(g(x))`` order
breaks both.  Jordan maps ``alpha*beta + beta*alpha`` do not depend on it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "SemiringError",
    "NotMonotone",
    "OutOfRange",
    "SizeMismatch",
    "ParseError",
    "CountSumMismatch",
    "Endo",
    "make_endo",
    "constant",
    "identity",
    "add",
    "mul",
    "leq",
    "power",
    "parse_rle",
    "format_rle",
    "to_runs",
    "parse_values",
]


class SemiringError(ValueError):
    """Base class for every domain error raised by this package."""


class NotMonotone(SemiringError):
    pass


class OutOfRange(SemiringError):
    pass


class SizeMismatch(SemiringError):
    pass


class ParseError(SemiringError):
    pass


class CountSumMismatch(ParseError):
    pass


@dataclass(frozen=True, slots=True)
class Endo:
    """A monotone self-map of the chain ``C_n``; ``values[x]`` is its image of ``x``.

    Instances are only created through :func:`make_endo` (or helpers that
    call it), which enforces range and monotonicity.
    """

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __add__(self, other: Endo) -> Endo:
        return add(self, other)

    def __mul__(self, other: Endo) -> Endo:
        return mul(self, other)

    def __pow__(self, m: int) -> Endo:
        return power(self, m)

    def __le__(self, other: Endo) -> bool:
        return leq(self, other)

    def __ge__(self, other: Endo) -> bool:
        return leq(other, self)

    def __lt__(self, other: Endo) -> bool:
        return self != other and leq(self, other)

    def __gt__(self, other: Endo) -> bool:
        return self != other and leq(other, self)

    def image(self) -> frozenset[int]:
        return frozenset(self.values)

    def is_constant(self) -> bool:
        return len(set(self.values)) == 1

    def __str__(self) -> str:
        return format_rle(self)

    def __repr__(self) -> str:
        return f"Endo({format_rle(self)!r}, n={self.n})"


def make_endo(n: int, values: Iterable[int]) -> Endo:
    """Validate ``values`` as a monotone map ``C_n -> C_n``."""
    vals = tuple(int(v) for v in values)
    if n < 1:
        raise OutOfRange(f"chain size must be >= 1, got {n}")
    if len(vals) != n:
        raise SizeMismatch(f"expected {n} values, got {len(vals)}")
    for v in vals:
        if not 0 <= v < n:
            raise OutOfRange(f"value {v} outside 0..{n - 1}")
    for x in range(n - 1):
        if vals[x] > vals[x + 1]:
            raise NotMonotone(f"values decrease at {x}: {vals[x]} > {vals[x + 1]}")
    return Endo(vals)


def constant(n: int, c: int) -> Endo:
    return make_endo(n, [c] * n)


def identity(n: int) -> Endo:
    return make_endo(n, range(n))


def _check_sizes(f: Endo, g: Endo) -> None:
    if f.n != g.n:
        raise SizeMismatch(f"chain sizes differ: {f.n} vs {g.n}")


def add(f: Endo, g: Endo) -> Endo:
    _check_sizes(f, g)
    return Endo(tuple(max(a, b) for a, b in zip(f.values, g.values)))


def mul(f: Endo, g: Endo) -> Endo:
    """Product ``f*g``: apply ``f``, then ``g``."""
    _check_sizes(f, g)
    gv = g.values
    return Endo(tuple(gv[v] for v in f.values))


def leq(f: Endo, g: Endo) -> bool:
    _check_sizes(f, g)
    return all(a <= b for a, b in zip(f.values, g.values))


def power(f: Endo, m: int) -> Endo:
    if m < 1:
        raise OutOfRange(f"power exponent must be >= 1, got {m}")
    result = f
    for _ in range(m - 1):
        result = mul(result, f)
    return result


_TOKEN = re.compile(r"^(\d+)(?:_(\d+))?$")


def parse_rle(text: str, n: int) -> Endo:
    """Parse run-length notation such as ``"1_5 5_2"`` or ``"1_6 3"``.

    A bare value token counts once.  Values must strictly increase and the
    counts must add up to ``n``.
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty run-length string")
    values: list[int] = []
    last = -1
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad token {tok!r} in {text!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if count < 1:
            raise ParseError(f"run count must be positive in {tok!r}")
        if value <= last:
            raise NotMonotone(f"run values must strictly increase in {text!r}")
        if value >= n:
            raise OutOfRange(f"value {value} outside 0..{n - 1}")
        last = value
        values.extend([value] * count)
    if len(values) != n:
        raise CountSumMismatch(f"run counts in {text!r} sum to {len(values)}, expected {n}")
    return make_endo(n, values)


def to_runs(f: Endo) -> list[tuple[int, int]]:
    """Maximal runs ``(value, count)`` of ``f``."""
    runs: list[tuple[int, int]] = []
    for v in f.values:
        if runs and runs[-1][0] == v:
            runs[-1] = (v, runs[-1][1] + 1)
        else:
            runs.append((v, 1))
    return runs


def format_rle(f: Endo) -> str:
    return " ".join(f"{v}_{c}" for v, c in to_runs(f))


def parse_values(text: str, n: int | None = None) -> Endo:
    """Parse a comma separated value vector like ``"0,2,2"``."""
    try:
        vals: Sequence[int] = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise ParseError(f"bad value vector {text!r}") from exc
    return make_endo(len(vals) if n is None else n, vals)
