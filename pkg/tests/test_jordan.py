from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from semiderive import jordan as J
from semiderive.chain_core import constant, identity, leq, parse_rle, parse_values
from semiderive.simplex import (
    NotInSimplex,
    all_types,
    enumerate_simplex,
    format_type,
    parse_type,
    right_identities,
    type_class,
    type_of,
)
from conftest import TET8, TRI3, TRI7

ELEMENTS7 = enumerate_simplex(TRI7)


def rle(text, n=7):
    return parse_rle(text, n)


def d7(alpha):
    return J.JordanMap(rle(alpha), TRI7)


def test_apply_examples():
    assert str(d7("1_5 5_2")(rle("1_5 3_2"))) == "1_5 3_2"
    assert str(d7("1_4 5_3")(rle("1_4 3_3"))) == "1_4 3_3"
    assert str(d7("1_4 3 5_2")(rle("1_3 3_3 5"))) == "1_4 3_2 5_1"
    top = J.JordanMap(constant(7, 5), TRI7)
    assert all(top(b) == constant(7, 5) for b in ELEMENTS7)


def test_apply_is_the_sum_of_both_products():
    a, b = rle("1_4 3 5_2"), rle("1_2 3_4 5")
    assert J.jordan_apply(J.JordanMap(a, TRI7), b) == a * b + b * a


def test_alpha_must_belong_to_the_simplex():
    with pytest.raises(NotInSimplex):
        J.JordanMap(rle("0_7"), TRI7)


@settings(max_examples=200)
@given(st.sampled_from(ELEMENTS7), st.sampled_from(ELEMENTS7), st.sampled_from(ELEMENTS7))
def test_linear_and_symmetric(a, b, c):
    d = J.JordanMap(a, TRI7)
    assert d(b + c) == d(b) + d(c)
    assert d(b) == J.JordanMap(b, TRI7)(a)


def test_leibniz_check_examples():
    ri = right_identities(TRI7).members[0]
    d = J.JordanMap(ri, TRI7)
    assert J.leibniz_scan(d, ELEMENTS7).verdict == "pass"
    d3 = J.JordanMap(constant(3, 1), TRI3)
    rep = J.leibniz_check(d3, parse_values("0,0,1"), parse_values("0,2,2"))
    assert rep.to_dict() == {
        "verdict": "fail",
        "witnesses": [{"beta": "0_2 1_1", "gamma": "0_1 2_2", "lhs": "1_3", "rhs": "2_3"}],
    }
    c = [constant(7, v) for v in (1, 3, 5)]
    assert J.leibniz_check(J.JordanMap(c[1], TRI7), c[0], c[2]).verdict == "pass"


def test_leibniz_scan_examples():
    bottom = J.JordanMap(constant(7, 1), TRI7)
    assert J.leibniz_scan(bottom, ELEMENTS7)
    assert J.leibniz_scan(bottom, []).verdict == "pass"
    assert J.leibniz_scan(bottom, [constant(7, 3)]).verdict == "pass"


def test_bbb_violations_all_involve_excluded_types():
    excluded = {parse_type("a,c,c"), parse_type("b,c,c")}
    for alpha in type_class(TRI7, parse_type("b,b,b")):
        rep = J.leibniz_scan(J.JordanMap(alpha, TRI7), ELEMENTS7, max_witnesses=None)
        assert rep.verdict == "fail"
        assert len(rep.witnesses) == rep.violations
        for w in rep.witnesses:
            assert type_of(w.beta, TRI7) in excluded or type_of(w.gamma, TRI7) in excluded


def test_recorded_witnesses_are_comparable():
    for prop in (4, 9, 10):
        t = J.proposition_type(prop, 3)
        for alpha in type_class(TRI7, t):
            rep = J.leibniz_scan(J.JordanMap(alpha, TRI7), ELEMENTS7, max_witnesses=None)
            for w in rep.witnesses:
                assert leq(w.lhs, w.rhs) or leq(w.rhs, w.lhs)


def test_claimed_sets():
    bbb = J.claimed_closed_set(TRI7, parse_type("b,b,b"))
    assert len(bbb) == 29
    acc = J.claimed_closed_set(TRI7, parse_type("a,c,c"))
    dropped = set(ELEMENTS7) - acc
    assert {format_type(type_of(e, TRI7)) for e in dropped} == {"a,a,b", "a,a,c"}
    assert J.claimed_closed_set(TET8, identity(4)) == frozenset(enumerate_simplex(TET8))
    assert len(J.claimed_closed_set(TRI3, parse_type("b,b,b"))) == 8


def test_prop14_exclusions_specialise_to_the_triangle():
    assert J.prop14_excluded_types(3, 1) == J.excluded_types(3, parse_type("b,b,b"))
    assert {format_type(t) for t in J.prop14_excluded_types(3, 1)} == {"a,c,c", "b,c,c"}


def test_admissibility_examples():
    bbb = J.claimed_closed_set(TRI7, parse_type("b,b,b"))
    for alpha in type_class(TRI7, parse_type("b,b,b")):
        d = J.JordanMap(alpha, TRI7)
        assert J.is_admissible(J.AdmissibleSet(TRI7, bbb, d))
        whole = J.is_admissible(J.AdmissibleSet(TRI7, frozenset(ELEMENTS7), d))
        assert not whole and whole.failure == "leibniz"
    top = constant(7, 5)
    assert J.is_admissible(J.AdmissibleSet(TRI7, frozenset({top}), J.JordanMap(top, TRI7)))


def test_closure_failure_is_reported():
    d = J.JordanMap(constant(7, 3), TRI7)
    res = J.is_admissible(J.AdmissibleSet(TRI7, frozenset({rle("1_6 3")}), d))
    assert not res and res.failure == "mul"


def test_maximality_examples():
    for name in ("b,b,b", "a,c,c"):
        t = parse_type(name)
        alpha = type_class(TRI7, t)[0]
        s = J.AdmissibleSet(TRI7, J.claimed_closed_set(TRI7, t), J.JordanMap(alpha, TRI7))
        res = J.is_maximal_admissible(s)
        assert res and len(res.checked) == 36 - len(s.members)


def test_proper_admissible_subset_is_not_maximal():
    consts = frozenset(constant(7, v) for v in (1, 3, 5))
    alpha = type_class(TRI7, parse_type("b,b,b"))[0]
    s = J.AdmissibleSet(TRI7, consts, J.JordanMap(alpha, TRI7))
    assert J.is_admissible(s)
    res = J.is_maximal_admissible(s)
    assert not res and res.escapes


def test_bbb_set_minus_a_constant_is_not_closed():
    bbb = J.claimed_closed_set(TRI7, parse_type("b,b,b"))
    alpha = type_class(TRI7, parse_type("b,b,b"))[0]
    res = J.is_admissible(J.AdmissibleSet(TRI7, bbb - {constant(7, 1)}, J.JordanMap(alpha, TRI7)))
    assert res.failure == "mul"


def test_maximality_needs_admissible_input():
    alpha = type_class(TRI7, parse_type("b,b,b"))[0]
    with pytest.raises(J.NotAdmissibleInput):
        J.is_maximal_admissible(J.AdmissibleSet(TRI7, frozenset(ELEMENTS7), J.JordanMap(alpha, TRI7)))


def test_closure_contains_seeds_and_is_closed():
    from semiderive.simplex import get_simplex

    sx = get_simplex(TRI7)
    a = sx.index[rle("1_5 5_2")]
    cl = J.closure(sx, [sx.index[rle("1_6 3")]], a)
    dv = [sx.index[J.jordan_apply(J.JordanMap(rle("1_5 5_2"), TRI7), e)] for e in sx.elements]
    for i in cl:
        assert dv[i] in cl
        for j in cl:
            assert sx.add_table[i][j] in cl and sx.mul_table[i][j] in cl


def test_type_table_examples():
    mult, jor = J.type_mult_table(), J.type_jordan_table()
    t = parse_type
    assert mult.cell(t("a,a,b"), t("a,a,c")) == t("a,a,a")
    assert mult.cell(t("c,c,c"), t("a,a,a")) == t("a,a,a")
    assert all(mult.cell(x, identity(3)) == x for x in all_types(3))
    assert jor.cell(t("a,c,c"), t("b,b,b")) == t("c,c,c")
    assert jor.cell(t("a,a,b"), t("a,a,c")) == t("a,a,b")
    assert jor.cell(t("a,a,a"), t("a,a,a")) == t("a,a,a")
    for r in all_types(3):
        for c in all_types(3):
            assert jor.cell(r, c) == mult.cell(r, c) + mult.cell(c, r)


def test_type_table_serialisation():
    tab = J.type_jordan_table()
    data = json.loads(json.dumps(tab.to_json()))
    assert len(data) == 10 and all(len(row) == 10 for row in data)
    assert len(tab.render().splitlines()) == 11


def test_jordan_ideals():
    ideal = [parse_type(s) for s in ("b,b,b", "b,b,c", "b,c,c", "c,c,c")]
    assert J.is_jordan_ideal(ideal)
    assert J.is_jordan_ideal(all_types(3))
    assert not J.is_jordan_ideal([parse_type("a,a,a")])


def test_commute_examples():
    d1, d2 = d7("1_5 5_2"), d7("1_4 5_3")
    assert J.commute_check(d1, d2, right_identities(TRI7).members)
    res = J.commute_check(d2, d1, [rle("1_5 3_2")])
    assert not res
    assert res.witness["d1_of_d2"] == "1_4 3_3"
    assert res.witness["d2_of_d1"] == "1_5 3_2"
    assert J.commute_check(d1, d1, ELEMENTS7)


def test_lemma_examples():
    a, b = rle("1_5 3_2"), rle("1_4 3_3")
    for g in right_identities(TRI7).members:
        assert g * a == g * b
    assert J.lemma_check(TRI7)
    fams = J.lemma_families(TET8)
    assert J.lemma_check(TET8, {"idempotent_form": fams["idempotent_form"]})


def test_local_commutation():
    assert J.local_commutation_check(TRI7, all_types(3))
    assert J.local_commutation_check(TRI7, [constant(3, 2)], ELEMENTS7)
    res = J.local_commutation_check(TRI7, [parse_type("a,a,c")], ELEMENTS7)
    assert not res and res.witness["type"] == "a,a,c"
