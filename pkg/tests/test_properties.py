import pytest
from hypothesis import given, settings, strategies as st

import oracle
from pclose.corpus import seed_groups
from pclose.errors import PreconditionError
from pclose.properties import (
    BASIC_AXIOMS,
    Property,
    admit,
    get_property,
    normal_subgroups,
    o_p,
    o_pe,
    o_upper_p,
    register,
    registered,
    verify_axioms,
)

GROUPS = dict(seed_groups())
SMALL = ["C6", "S3", "D8", "Q8", "D10", "A4", "D12", "F20", "F21", "S4", "SL(2,3)", "A5"]
PROPS = ["trivial", "nilpotent", "solvable", "odd-order", "pi:2", "pi:3", "pi:2,3", "pi:5"]


def _oracle_holds(name, H, degree):
    n = len(H)
    if name == "trivial":
        return n == 1
    if name == "nilpotent":
        return oracle.is_nilpotent(H, degree)
    if name == "solvable":
        return oracle.is_solvable(H, degree)
    if name == "odd-order":
        return n % 2 == 1
    return oracle.pi_number(n, [int(t) for t in name[3:].split(",")])


def _oracle_quotient(name, elems, N, degree):
    index = len(elems) // len(N)
    if name == "trivial":
        return index == 1
    if name == "nilpotent":
        return oracle.nilpotent_residual(elems, degree) <= N
    if name == "solvable":
        return oracle.derived_residual(elems, degree) <= N
    if name == "odd-order":
        return index % 2 == 1
    return oracle.pi_number(index, [int(t) for t in name[3:].split(",")])


@pytest.fixture(scope="module")
def normals():
    out = {}
    for name in SMALL:
        G = GROUPS[name]
        elems = oracle.elements(G)
        out[name] = (elems, oracle.normal_subgroups(elems, G.degree))
    return out


@pytest.mark.parametrize("gname", SMALL)
def test_closure_operators_match_oracle(gname, normals):
    G = GROUPS[gname]
    elems, norms = normals[gname]
    for pname in PROPS:
        P = get_property(pname)
        top = max((N for N in norms if _oracle_holds(pname, N, G.degree)), key=len)
        bottom = min((N for N in norms if _oracle_quotient(pname, elems, N, G.degree)), key=len)
        assert o_p(G, P).order() == len(top), (gname, pname)
        assert o_upper_p(G, P).order() == len(bottom), (gname, pname)


def test_frozen_closure_values():
    S4, S5, A5 = GROUPS["S4"], GROUPS["S5"], GROUPS["A5"]
    nil, sol = get_property("nilpotent"), get_property("solvable")
    assert o_p(S4, nil).order() == 4
    assert o_p(A5, sol).order() == 1
    assert o_upper_p(S4, nil).order() == 12
    assert o_upper_p(S5, sol).order() == 60
    assert o_upper_p(GROUPS["A7"], get_property("pi:2")).order() == 2520


def test_o_pe_values():
    sol = get_property("solvable")
    assert o_pe(GROUPS["S5"], sol).order() == 60
    assert o_pe(GROUPS["S4"], sol).order() == 24
    assert o_pe(GROUPS["A5xS4"], sol).order() == 1440
    assert o_pe(GROUPS["SL(2,5)"], get_property("cf:A5")).order() == 120


def test_o_pe_requires_solvable_groups_in_p():
    with pytest.raises(PreconditionError):
        o_pe(GROUPS["S4"], get_property("nilpotent"))


@pytest.mark.parametrize("pname", ["trivial", "nilpotent", "solvable", "odd-order", "pi:2", "pi:3,5", "cf:A5"])
def test_builtins_pass_declared_axioms(pname):
    rep = admit(get_property(pname), ())
    assert rep.passed, rep.to_json()
    for axiom in get_property(pname).axioms:
        assert rep.results[axiom].status == "pass", axiom


def test_abelian_fails_normal_product():
    P = get_property("abelian")
    rep = verify_axioms(P, [GROUPS["D8"]])
    assert not rep.passed
    bad = rep.results["normal_product"]
    assert bad.status == "fail" and bad.witness["order"] == 8
    with pytest.raises(PreconditionError):
        o_p(GROUPS["D8"], P)


def test_registry():
    assert {"trivial", "nilpotent", "solvable", "abelian", "odd-order"} <= set(registered())
    assert get_property("pi:3,2") is get_property("pi:2,3")
    assert get_property("sol") is get_property("solvable")
    with pytest.raises(PreconditionError):
        register(Property("solvable", lambda G: True, frozenset(BASIC_AXIOMS)))
    with pytest.raises(PreconditionError):
        get_property("no-such-property")


def test_custom_property_must_declare_axioms():
    P = Property("custom-undeclared", lambda G: G.order() == 1, frozenset())
    with pytest.raises(PreconditionError):
        admit(P)


def test_cf_property():
    P = get_property("cf:A5")
    assert P(GROUPS["S5"]) and P(GROUPS["SL(2,5)"]) and P(GROUPS["S4"])
    assert not P(GROUPS["A6"]) and not P(GROUPS["L2(7)"])


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL + ["S5", "A5xS3", "S3xS3"]), st.sampled_from(PROPS))
def test_closure_invariants(gname, pname):
    G, P = GROUPS[gname], get_property(pname)
    top, bottom = o_p(G, P), o_upper_p(G, P)
    assert G.is_normal(top) and G.is_normal(bottom)
    assert P(top)
    assert P.holds_section(G, bottom)
    assert o_p(top, P).order() == top.order()
    for N in normal_subgroups(G):
        if P(N):
            assert N.is_subgroup_of(top)
        if P.holds_section(G, N):
            assert bottom.is_subgroup_of(N)
