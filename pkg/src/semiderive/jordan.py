"""Jordan multiplications ``d_alpha(beta) = alpha*beta + beta*alpha`` on a simplex.

Covers Leibniz-rule scans, the closed subsemirings attached to each
derivation type, their admissibility and maximality, the type tables of the
triangle, Jordan ideals, and commutation of local derivations.

Exhaustive scans work on element indices of :class:`~semiderive.simplex.Simplex`
(lexicographic order), so witness lists come out sorted by ``(beta, gamma)``
value vectors without an extra sort.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .chain_core import Endo, SemiringError, constant, format_rle, identity, leq
from .simplex import (
    NotInSimplex,
    Simplex,
    SimplexSpec,
    all_types,
    format_type,
    get_simplex,
    idempotent_type_census,
    parse_type,
    right_identities,
)

__all__ = [
    "UnsupportedType",
    "NotAdmissibleInput",
    "JordanMap",
    "Witness",
    "LeibnizReport",
    "AdmissibleSet",
    "Admissibility",
    "Maximality",
    "TypeTable",
    "CommuteResult",
    "jordan_apply",
    "leibniz_check",
    "leibniz_scan",
    "claimed_closed_set",
    "excluded_types",
    "prop14_excluded_types",
    "closure",
    "is_admissible",
    "is_maximal_admissible",
    "type_mult_table",
    "type_jordan_table",
    "type_jordan",
    "is_jordan_ideal",
    "commute_check",
    "lemma_check",
    "lemma_families",
    "local_commutation_check",
    "proposition_type",
    "TRIANGLE_TYPES",
]


class UnsupportedType(SemiringError):
    pass


class NotAdmissibleInput(SemiringError):
    pass


@dataclass(frozen=True)
class JordanMap:
    alpha: Endo
    spec: SimplexSpec

    def __post_init__(self) -> None:
        if self.alpha not in get_simplex(self.spec):
            raise NotInSimplex(f"{self.alpha} is not in simplex {self.spec}")

    def __call__(self, beta: Endo) -> Endo:
        return jordan_apply(self, beta)

    def __str__(self) -> str:
        return f"d[{format_rle(self.alpha)}]"


def jordan_apply(d: JordanMap, beta: Endo) -> Endo:
    if beta not in get_simplex(d.spec):
        raise NotInSimplex(f"{beta} is not in simplex {d.spec}")
    return d.alpha * beta + beta * d.alpha


@dataclass(frozen=True)
class Witness:
    beta: Endo
    gamma: Endo
    lhs: Endo
    rhs: Endo

    def to_dict(self) -> dict[str, str]:
        return {
            "beta": format_rle(self.beta),
            "gamma": format_rle(self.gamma),
            "lhs": format_rle(self.lhs),
            "rhs": format_rle(self.rhs),
        }


@dataclass
class LeibnizReport:
    verdict: str
    witnesses: list[Witness] = field(default_factory=list)
    pairs_checked: int = 0
    violations: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def leibniz_check(d: JordanMap, beta: Endo, gamma: Endo) -> LeibnizReport:
    """Compare ``d(beta*gamma)`` with ``d(beta)*gamma + beta*d(gamma)``."""
    lhs = jordan_apply(d, beta * gamma)
    rhs = jordan_apply(d, beta) * gamma + beta * jordan_apply(d, gamma)
    if lhs == rhs:
        return LeibnizReport("pass", pairs_checked=1)
    return LeibnizReport("fail", [Witness(beta, gamma, lhs, rhs)], pairs_checked=1, violations=1)


def _jordan_vector(sx: Simplex, a: int) -> list[int]:
    add, mul = sx.add_table, sx.mul_table
    row = mul[a]
    return [add[row[i]][mul[i][a]] for i in range(len(sx))]


def _scan_indices(
    sx: Simplex, a: int, dom: Sequence[int], max_witnesses: int | None, stop_at_first: bool = False
) -> tuple[list[tuple[int, int, int, int]], int, int]:
    add, mul = sx.add_table, sx.mul_table
    dv = _jordan_vector(sx, a)
    found: list[tuple[int, int, int, int]] = []
    violations = 0
    for i in dom:
        mi, di = mul[i], mul[dv[i]]
        for j in dom:
            lhs = dv[mi[j]]
            rhs = add[di[j]][mi[dv[j]]]
            if lhs != rhs:
                violations += 1
                if max_witnesses is None or len(found) < max_witnesses:
                    found.append((i, j, lhs, rhs))
                if stop_at_first:
                    return found, violations, 0
    return found, violations, len(dom) * len(dom)


def leibniz_scan(
    d: JordanMap, domain: Iterable[Endo], max_witnesses: int | None = None
) -> LeibnizReport:
    """Exhaustive Leibniz check over all ordered pairs of ``domain``.

    ``max_witnesses`` caps the stored witness list; ``violations`` still
    counts every failing pair.
    """
    sx = get_simplex(d.spec)
    dom = sx.indices(set(domain))
    a = sx.index[d.alpha]
    found, violations, checked = _scan_indices(sx, a, dom, max_witnesses)
    els = sx.elements
    witnesses = [Witness(els[i], els[j], els[l], els[r]) for i, j, l, r in found]
    return LeibnizReport(
        "pass" if violations == 0 else "fail", witnesses, pairs_checked=checked, violations=violations
    )


# --- closed subsemirings attached to derivation types -------------------------

TRIANGLE_TYPES = {name: parse_type(name) for name in (
    "a,a,a", "a,a,b", "a,a,c", "a,b,b", "a,b,c", "a,c,c", "b,b,b", "b,b,c", "b,c,c", "c,c,c",
)}

_T = TRIANGLE_TYPES
_TRIANGLE_EXCLUSIONS: dict[Endo, frozenset[Endo]] = {
    _T["b,b,b"]: frozenset({_T["a,c,c"], _T["b,c,c"]}),
    _T["a,b,b"]: frozenset({_T["a,c,c"], _T["b,c,c"]}),
    _T["a,a,c"]: frozenset({_T["a,c,c"], _T["b,c,c"]}),
    _T["b,b,c"]: frozenset({_T["a,c,c"], _T["b,c,c"]}),
    _T["a,a,b"]: frozenset({_T["a,c,c"], _T["b,c,c"]}),
    _T["a,c,c"]: frozenset({_T["a,a,b"], _T["a,a,c"]}),
    _T["b,c,c"]: frozenset({_T["a,a,b"], _T["a,a,c"]}),
}

_TRIANGLE_PROPS = {
    1: "a,b,c", 2: "a,a,a", 3: "c,c,c", 4: "b,b,b", 5: "a,b,b",
    6: "a,a,c", 7: "b,b,c", 8: "a,c,c", 9: "a,a,b", 10: "b,c,c",
}


def proposition_type(prop: int, k: int, level: int | None = None) -> Endo:
    """Derivation type covered by proposition ``prop`` for a simplex of dimension ``k``."""
    if 1 <= prop <= 10:
        if k != 3:
            raise UnsupportedType(f"proposition {prop} concerns triangles (k=3), got k={k}")
        return _T[_TRIANGLE_PROPS[prop]]
    if prop == 11:
        return identity(k)
    if prop == 12:
        return constant(k, 0)
    if prop == 13:
        return constant(k, k - 1)
    if prop == 14:
        if level is None or not 0 < level < k - 1:
            raise UnsupportedType(f"proposition 14 needs 0 < level < {k - 1}, got {level}")
        return constant(k, level)
    raise UnsupportedType(f"no proposition {prop}")


def prop14_excluded_types(k: int, level: int) -> frozenset[Endo]:
    """Types ``m`` with ``m[level] > level`` and ``m[0] <= level``."""
    return frozenset(
        t for t in all_types(k) if t.values[level] > level and t.values[0] <= level
    )


def excluded_types(k: int, derivation_type: Endo) -> frozenset[Endo]:
    t = derivation_type
    if t.n != k:
        raise UnsupportedType(f"type {format_type(t)} does not have length {k}")
    if t == identity(k) or t == constant(k, 0) or t == constant(k, k - 1):
        return frozenset()
    if t.is_constant():
        return prop14_excluded_types(k, t.values[0])
    if k == 3 and t in _TRIANGLE_EXCLUSIONS:
        return _TRIANGLE_EXCLUSIONS[t]
    raise UnsupportedType(f"no closed subsemiring known for type ({format_type(t)}) at k={k}")


def claimed_closed_set(spec: SimplexSpec, derivation_type: Endo) -> frozenset[Endo]:
    """The subsemiring asserted to be maximal among those closed under ``d_alpha``."""
    excl = excluded_types(spec.k, derivation_type)
    sx = get_simplex(spec)
    return frozenset(e for e, t in zip(sx.elements, sx.types) if t not in excl)


# --- admissibility and maximality ----------------------------------------------


@dataclass(frozen=True)
class AdmissibleSet:
    spec: SimplexSpec
    members: frozenset[Endo]
    derivation: JordanMap


@dataclass
class Admissibility:
    ok: bool
    failure: str | None = None
    detail: dict = field(default_factory=dict)
    report: LeibnizReport | None = None

    def __bool__(self) -> bool:
        return self.ok


def _first_closure_failure(sx: Simplex, dom: Sequence[int], a: int) -> tuple[str, dict] | None:
    members = set(dom)
    add, mul = sx.add_table, sx.mul_table
    els = sx.elements
    for op, table in (("add", add), ("mul", mul)):
        for i in dom:
            row = table[i]
            for j in dom:
                if row[j] not in members:
                    return op, {"left": format_rle(els[i]), "right": format_rle(els[j]),
                                "result": format_rle(els[row[j]])}
    dv = _jordan_vector(sx, a)
    for i in dom:
        if dv[i] not in members:
            return "derivation", {"beta": format_rle(els[i]), "result": format_rle(els[dv[i]])}
    return None


def is_admissible(s: AdmissibleSet) -> Admissibility:
    """Check closure under ``+``, ``*`` and the derivation, then the Leibniz rule."""
    sx = get_simplex(s.spec)
    dom = sx.indices(s.members)
    a = sx.index[s.derivation.alpha]
    bad = _first_closure_failure(sx, dom, a)
    if bad is not None:
        return Admissibility(False, bad[0], bad[1])
    report = leibniz_scan(s.derivation, s.members, max_witnesses=1)
    if not report:
        return Admissibility(False, "leibniz", report.witnesses[0].to_dict(), report)
    return Admissibility(True, report=report)


def closure(sx: Simplex, seeds: Iterable[int], a: int) -> set[int]:
    """Smallest index set containing ``seeds`` closed under ``+``, ``*`` and ``d_alpha``."""
    add, mul = sx.add_table, sx.mul_table
    dv = _jordan_vector(sx, a)
    members: list[int] = []
    seen: set[int] = set()
    queue = list(dict.fromkeys(seeds))
    while queue:
        x = queue.pop()
        if x in seen:
            continue
        seen.add(x)
        members.append(x)
        new = [dv[x]]
        ax, mx = add[x], mul[x]
        for y in members:
            new.append(ax[y])
            new.append(mx[y])
            new.append(mul[y][x])
        queue.extend(z for z in new if z not in seen)
    return seen


@dataclass
class Maximality:
    ok: bool
    checked: list[dict] = field(default_factory=list)
    escapes: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def is_maximal_admissible(s: AdmissibleSet) -> Maximality:
    """No strict admissible superset exists.

    For every element ``e`` outside the set, the ``+, *, d``-closure of
    ``members | {e}`` is generated; it must contain a Leibniz violation.
    Any admissible superset containing ``e`` would contain that closure, so
    this rules out every strict superset.
    """
    adm = is_admissible(s)
    if not adm:
        raise NotAdmissibleInput(f"input set is not admissible ({adm.failure}: {adm.detail})")
    sx = get_simplex(s.spec)
    a = sx.index[s.derivation.alpha]
    base = set(sx.indices(s.members))
    els = sx.elements
    checked, escapes = [], []
    for e in range(len(sx)):
        if e in base:
            continue
        cl = sorted(closure(sx, base | {e}, a))
        found, _, _ = _scan_indices(sx, a, cl, max_witnesses=1, stop_at_first=True)
        entry = {"element": format_rle(els[e]), "closure_size": len(cl)}
        if found:
            i, j, l, r = found[0]
            entry["witness"] = Witness(els[i], els[j], els[l], els[r]).to_dict()
            checked.append(entry)
        else:
            escapes.append(entry)
    return Maximality(not escapes, checked, escapes)


# --- type tables -------------------------------------------------------------------


@dataclass
class TypeTable:
    kind: str
    labels: list[Endo]
    entries: list[list[Endo]]

    def cell(self, row: Endo, col: Endo) -> Endo:
        return self.entries[self.labels.index(row)][self.labels.index(col)]

    def as_strings(self) -> list[list[str]]:
        return [[format_type(t) for t in row] for row in self.entries]

    def to_json(self) -> list[list[str]]:
        return self.as_strings()

    def render(self) -> str:
        head = ["." if self.kind == "mult" else "o"] + [f"({format_type(t)})" for t in self.labels]
        rows = [head] + [
            [f"({format_type(r)})"] + [f"({c})" for c in cells]
            for r, cells in zip(self.labels, self.as_strings())
        ]
        width = max(len(c) for row in rows for c in row)
        return "\n".join(" ".join(c.ljust(width) for c in row).rstrip() for row in rows)


def type_jordan(r: Endo, c: Endo) -> Endo:
    return r * c + c * r


def type_mult_table(k: int = 3) -> TypeTable:
    """Row type is the left factor, i.e. the one applied first."""
    labels = all_types(k)
    return TypeTable("mult", labels, [[r * c for c in labels] for r in labels])


def type_jordan_table(k: int = 3) -> TypeTable:
    labels = all_types(k)
    return TypeTable("jordan", labels, [[type_jordan(r, c) for c in labels] for r in labels])


def is_jordan_ideal(J: Iterable[Endo], table: TypeTable | None = None) -> bool:
    """Additively closed and absorbing for the Jordan product against every type."""
    Js = set(J)
    if not Js:
        raise ValueError("a Jordan ideal must be nonempty")
    if table is None:
        table = type_jordan_table(next(iter(Js)).n)
    if any(u + v not in Js for u in Js for v in Js):
        return False
    return all(table.cell(u, s) in Js for u in Js for s in table.labels)


# --- commutation of local derivations --------------------------------------------


@dataclass
class CommuteResult:
    ok: bool
    witness: dict | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def commute_check(d1: JordanMap, d2: JordanMap, domain: Iterable[Endo]) -> CommuteResult:
    """``d1(d2(g)) == d2(d1(g))`` for every ``g`` in ``domain`` (lexicographic)."""
    if d1.spec != d2.spec:
        raise SemiringError("derivations live on different simplices")
    count = 0
    for g in sorted(set(domain), key=lambda e: e.values):
        x12 = jordan_apply(d1, jordan_apply(d2, g))
        x21 = jordan_apply(d2, jordan_apply(d1, g))
        count += 1
        if x12 != x21:
            return CommuteResult(False, {
                "gamma": format_rle(g),
                "d1_of_d2": format_rle(x12),
                "d2_of_d1": format_rle(x21),
                "comparable": leq(x12, x21) or leq(x21, x12),
            }, count)
    return CommuteResult(True, None, count)


def lemma_families(spec: SimplexSpec) -> dict[str, list[Endo]]:
    """Types for which same-type pairs are claimed to agree after a right identity.

    Triangles: every type.  Larger simplices: the identity type, all
    constant types and all idempotent-form types.
    """
    k = spec.k
    if k == 3:
        return {"all": all_types(3)}
    census = idempotent_type_census(k)
    return {
        "right_identity": [identity(k)],
        "constant": [constant(k, j) for j in range(k)],
        "idempotent_form": census["idempotent_forms"].members,
    }


def _same_type_pairs(spec: SimplexSpec, types: Iterable[Endo]):
    sx = get_simplex(spec)
    wanted = set(types)
    classes: dict[Endo, list[Endo]] = {}
    for e, t in zip(sx.elements, sx.types):
        if t in wanted:
            classes.setdefault(t, []).append(e)
    for t in sorted(classes, key=lambda x: x.values):
        members = classes[t]
        for x in members:
            for y in members:
                yield t, x, y


@dataclass
class LemmaResult:
    ok: bool
    pairs: int = 0
    checks: int = 0
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def lemma_check(spec: SimplexSpec, families: dict[str, list[Endo]] | None = None) -> LemmaResult:
    """For same-type ``alpha, beta`` and every right identity ``g``: ``g*alpha == g*beta``."""
    fams = lemma_families(spec) if families is None else families
    ris = right_identities(spec).members
    pairs = checks = 0
    for _, types in fams.items():
        for t, x, y in _same_type_pairs(spec, types):
            pairs += 1
            for g in ris:
                checks += 1
                if g * x != g * y:
                    return LemmaResult(False, pairs, checks, {
                        "type": format_type(t), "alpha": format_rle(x), "beta": format_rle(y),
                        "gamma": format_rle(g), "gamma_alpha": format_rle(g * x),
                        "gamma_beta": format_rle(g * y),
                    })
    return LemmaResult(True, pairs, checks)


def local_commutation_check(
    spec: SimplexSpec,
    types: Iterable[Endo],
    domain: Iterable[Endo] | None = None,
) -> LemmaResult:
    """All same-type derivation pairs commute on ``domain`` (default: right identities)."""
    dom = right_identities(spec).members if domain is None else list(domain)
    pairs = checks = 0
    for t, x, y in _same_type_pairs(spec, types):
        if x.values >= y.values:
            continue
        pairs += 1
        res = commute_check(JordanMap(x, spec), JordanMap(y, spec), dom)
        checks += res.checked
        if not res:
            w = dict(res.witness or {})
            w.update(type=format_type(t), alpha=format_rle(x), beta=format_rle(y))
            return LemmaResult(False, pairs, checks, w)
    return LemmaResult(True, pairs, checks)
