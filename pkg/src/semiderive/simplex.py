"""Simplices of the endomorphism semiring of a chain, types and censuses.

The simplex ``sigma^(n){a_0, ..., a_{k-1}}`` is the set of endomorphisms of
``C_n`` whose image lies in the vertex set ``A``.  Every element has a *type*,
the tuple of vertex indices ``(i_0, ..., i_{k-1})`` with ``f(a_j) = a_{i_j}``;
types are themselves endomorphisms of ``C_k`` (the coordinate simplex) and
are stored as :class:`~semiderive.chain_core.Endo` of size ``k``.
"""

from __future__ import annotations

import math
import re
import string
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .chain_core import (
    Endo,
    OutOfRange,
    ParseError,
    SemiringError,
    constant,
    identity,
    make_endo,
    power,
)

__all__ = [
    "SimplexSpec",
    "Simplex",
    "Face",
    "Census",
    "NotInSimplex",
    "NotASubsemiring",
    "EmptySubset",
    "NotSubset",
    "LevelOutOfRange",
    "parse_simplex",
    "get_simplex",
    "enumerate_simplex",
    "simplex_size",
    "type_of",
    "type_class",
    "all_types",
    "format_type",
    "parse_type",
    "face",
    "faces",
    "right_identities",
    "right_identity_order",
    "nilpotent_class",
    "idempotent_type_census",
    "lift_subsemiring",
    "is_closed",
    "catalan",
    "fibonacci",
]


class NotInSimplex(SemiringError):
    pass


class NotASubsemiring(SemiringError):
    pass


class EmptySubset(SemiringError):
    pass


class NotSubset(SemiringError):
    pass


class LevelOutOfRange(SemiringError):
    pass


@dataclass(frozen=True)
class SimplexSpec:
    n: int
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        verts = tuple(int(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if self.n < 1:
            raise OutOfRange(f"chain size must be >= 1, got {self.n}")
        if not 1 <= len(verts) <= self.n:
            raise OutOfRange(f"need 1 <= k <= n vertices, got {len(verts)}")
        if any(not 0 <= v < self.n for v in verts):
            raise OutOfRange(f"vertices {verts} outside 0..{self.n - 1}")
        if any(a >= b for a, b in zip(verts, verts[1:])):
            raise NotSubset(f"vertices must strictly increase: {verts}")

    @property
    def k(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return f"n={self.n};A={','.join(map(str, self.vertices))}"


_SPEC = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*A\s*=\s*([\d,\s]+)$")


def parse_simplex(text: str) -> SimplexSpec:
    """Parse ``"n=7;A=1,3,5"``."""
    m = _SPEC.match(text)
    if m is None:
        raise ParseError(f"bad simplex spec {text!r}; expected 'n=7;A=1,3,5'")
    verts = tuple(int(t) for t in m.group(2).replace(" ", "").split(",") if t)
    return SimplexSpec(int(m.group(1)), verts)


def simplex_size(n: int, k: int) -> int:
    return math.comb(n + k - 1, k - 1)


def enumerate_simplex(spec: SimplexSpec) -> list[Endo]:
    """All monotone maps ``C_n -> A`` in lexicographic order of value vectors."""
    return [Endo(vals) for vals in combinations_with_replacement(spec.vertices, spec.n)]


class Simplex:
    """Enumerated simplex with integer-indexed operation tables.

    The tables turn the exhaustive scans of the ``jordan`` module into plain
    list lookups; element ``i`` is ``elements[i]`` in lexicographic order.
    """

    def __init__(self, spec: SimplexSpec):
        self.spec = spec
        self.elements: list[Endo] = enumerate_simplex(spec)
        self.index: dict[Endo, int] = {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, f: object) -> bool:
        return f in self.index

    @cached_property
    def add_table(self) -> list[list[int]]:
        idx, els = self.index, self.elements
        return [[idx[a + b] for b in els] for a in els]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        idx, els = self.index, self.elements
        return [[idx[a * b] for b in els] for a in els]

    @cached_property
    def types(self) -> list[Endo]:
        return [type_of(e, self.spec) for e in self.elements]

    def indices(self, members: Iterable[Endo]) -> list[int]:
        out = []
        for m in members:
            try:
                out.append(self.index[m])
            except KeyError:
                raise NotInSimplex(f"{m} is not in simplex {self.spec}") from None
        return sorted(out)


@lru_cache(maxsize=64)
def get_simplex(spec: SimplexSpec) -> Simplex:
    return Simplex(spec)


def _check_member(f: Endo, spec: SimplexSpec) -> None:
    if f.n != spec.n or not f.image() <= set(spec.vertices):
        raise NotInSimplex(f"{f} is not in simplex {spec}")


def type_of(f: Endo, spec: SimplexSpec) -> Endo:
    _check_member(f, spec)
    pos = {v: i for i, v in enumerate(spec.vertices)}
    return Endo(tuple(pos[f(a)] for a in spec.vertices))


def all_types(k: int) -> list[Endo]:
    """The coordinate simplex: every endomorphism of ``C_k``, lexicographic."""
    return enumerate_simplex(SimplexSpec(k, tuple(range(k))))


def type_class(spec: SimplexSpec, t: Endo) -> list[Endo]:
    if t.n != spec.k:
        raise NotInSimplex(f"type {format_type(t)} has length {t.n}, simplex has k={spec.k}")
    return [e for e in enumerate_simplex(spec) if type_of(e, spec) == t]


def format_type(t: Endo) -> str:
    return ",".join(string.ascii_lowercase[i] for i in t.values)


def parse_type(text: str, k: int | None = None) -> Endo:
    """Parse ``"a,a,b"`` (parentheses optional) into a coordinate-simplex element."""
    letters = [s for s in text.strip().strip("()").replace(" ", "").split(",") if s]
    try:
        vals = [string.ascii_lowercase.index(s) for s in letters]
    except ValueError:
        raise ParseError(f"bad type string {text!r}") from None
    if any(len(s) != 1 for s in letters):
        raise ParseError(f"bad type string {text!r}")
    return make_endo(len(vals) if k is None else k, vals)


@dataclass(frozen=True)
class Face:
    spec: SimplexSpec
    proper: bool

    @property
    def kind(self) -> str:
        return {1: "vertex", 2: "string", 3: "triangle"}.get(self.spec.k, "simplex")

    def __str__(self) -> str:
        name = {"string": "STR", "triangle": "TRI", "vertex": "VTX"}.get(self.kind, "SIMPLEX")
        return f"{name}^({self.spec.n}){{{','.join(map(str, self.spec.vertices))}}}"


def face(spec: SimplexSpec, subset: Iterable[int]) -> Face:
    sub = sorted(set(int(v) for v in subset))
    if not sub:
        raise EmptySubset("a face needs at least one vertex")
    if not set(sub) <= set(spec.vertices):
        raise NotSubset(f"{sub} is not a subset of {spec.vertices}")
    return Face(SimplexSpec(spec.n, tuple(sub)), proper=len(sub) < spec.k)


def faces(spec: SimplexSpec) -> list[Face]:
    from itertools import combinations

    out = []
    for size in range(1, spec.k + 1):
        for sub in combinations(spec.vertices, size):
            out.append(face(spec, sub))
    return out


@dataclass
class Census:
    label: str
    members: list[Endo] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.members)


def right_identity_order(spec: SimplexSpec) -> int:
    """Product of consecutive vertex gaps (empty product for one vertex)."""
    v = spec.vertices
    return math.prod(v[i + 1] - v[i] for i in range(spec.k - 1))


def right_identities(spec: SimplexSpec) -> Census:
    """Elements fixing every vertex, i.e. of type ``(0, 1, ..., k-1)``."""
    ident = identity(spec.k)
    members = [e for e in enumerate_simplex(spec) if type_of(e, spec) == ident]
    return Census("right_identities", members)


def nilpotent_class(k: int, level: int) -> Census:
    """Endomorphisms of ``C_k`` some power of which is the constant ``level``."""
    if not 0 <= level <= k - 1:
        raise LevelOutOfRange(f"level {level} outside 0..{k - 1}")
    target = constant(k, level)
    members = []
    for f in all_types(k):
        # powers of a map on k points stabilise after at most k steps
        if any(power(f, m) == target for m in range(1, k + 1)):
            members.append(f)
    return Census(f"nilpotent[{level}]", members)


def idempotent_type_census(k: int) -> dict[str, Census]:
    """Idempotents of ``C_k``; idempotent forms; and constants + identity + forms."""
    if k < 1:
        raise OutOfRange("k must be >= 1")
    ident = identity(k)
    idem = [f for f in all_types(k) if f * f == f]
    forms = [f for f in idem if not f.is_constant() and f != ident]
    family = sorted(
        set(forms) | {constant(k, j) for j in range(k)} | {ident},
        key=lambda e: e.values,
    )
    return {
        "idempotents": Census("idempotents", idem),
        "idempotent_forms": Census("idempotent_forms", forms),
        "theorem3_family": Census("theorem3_family", family),
    }


def is_closed(members: Iterable[Endo]) -> bool:
    s = set(members)
    return all(a + b in s and a * b in s for a in s for b in s)


def _ideal_sides(R: set[Endo], universe: Sequence[Endo]) -> tuple[bool, bool]:
    left = all(s * r in R for r in R for s in universe)
    right = all(r * s in R for r in R for s in universe)
    return left, right


def lift_subsemiring(spec: SimplexSpec, R: Iterable[Endo]) -> frozenset[Endo]:
    """All simplex elements whose type lies in the coordinate subsemiring ``R``.

    Raises :class:`NotASubsemiring` when ``R`` is not closed under ``+``
    and ``*``.  Closure of the lift, and inheritance of left/right ideal
    properties, are checked on the way out.
    """
    Rs = set(R)
    if not Rs:
        raise NotASubsemiring("empty set of types")
    if any(t.n != spec.k for t in Rs):
        raise NotASubsemiring(f"types must have length k={spec.k}")
    if not is_closed(Rs):
        raise NotASubsemiring("types are not closed under + and *")
    sx = get_simplex(spec)
    lifted = frozenset(e for e, t in zip(sx.elements, sx.types) if t in Rs)
    if not is_closed(lifted):
        raise AssertionError("lift of a subsemiring is not closed")
    r_left, r_right = _ideal_sides(Rs, all_types(spec.k))
    if r_left or r_right:
        l_left, l_right = _ideal_sides(set(lifted), sx.elements)
        if (r_left and not l_left) or (r_right and not l_right):
            raise AssertionError("ideal property not inherited by the lift")
    return lifted


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


@lru_cache(maxsize=None)
def fibonacci(m: int) -> int:
    """``F_1 = F_2 = 1``."""
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a
