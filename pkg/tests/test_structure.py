import pytest

import oracle
from pclose.corpus import seed_groups
from pclose.group import PermGroup
from pclose.simple import label_for, label_order
from pclose.structure import (
    analyze,
    center,
    components,
    composition_factors,
    fitting,
    is_quasisimple,
    is_simple,
    solvable_radical,
)

GROUPS = dict(seed_groups())

# (|Sol|, |F|, component orders, nonabelian composition factors); classical values,
# cross-checked against the brute-force oracle below for the smaller groups
FROZEN = {
    "S3": (6, 3, [], []),
    "D10": (10, 5, [], []),
    "A4": (12, 4, [], []),
    "F20": (20, 5, [], []),
    "F21": (21, 7, [], []),
    "S4": (24, 4, [], []),
    "SL(2,3)": (24, 8, [], []),
    "S3xS3": (36, 9, [], []),
    "S4xC2": (48, 8, [], []),
    "A5": (1, 1, [60], ["A5"]),
    "S5": (1, 1, [60], ["A5"]),
    "SL(2,5)": (2, 2, [120], ["A5"]),
    "A5xC3": (3, 3, [60], ["A5"]),
    "L2(7)": (1, 1, [168], ["L2(7)"]),
    "A5xS3": (6, 3, [60], ["A5"]),
    "A6": (1, 1, [360], ["A6"]),
    "S6": (1, 1, [360], ["A6"]),
    "A5xS4": (24, 4, [60], ["A5"]),
    "A7": (1, 1, [2520], ["A7"]),
    "S7": (1, 1, [2520], ["A7"]),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_structure(name):
    G = GROUPS[name]
    sol, fit, comps, cf = FROZEN[name]
    assert solvable_radical(G).order() == sol
    assert fitting(G).order() == fit
    assert sorted(K.order() for K in components(G)) == comps
    assert sorted(x for x in composition_factors(G) if not x.startswith("C")) == cf


@pytest.mark.parametrize("name", ["S3", "D10", "A4", "S4", "SL(2,3)", "S3xS3", "A5", "S5", "SL(2,5)"])
def test_radicals_match_oracle(name):
    G = GROUPS[name]
    n = G.degree
    elems = oracle.elements(G)
    normals = oracle.normal_subgroups(elems, n)
    sol = max((N for N in normals if oracle.is_solvable(N, n)), key=len)
    nil = max((N for N in normals if oracle.is_nilpotent(N, n)), key=len)
    assert solvable_radical(G).order() == len(sol)
    assert fitting(G).order() == len(nil)
    assert center(G).order() == len(oracle.centralizer(elems, elems))


@pytest.mark.parametrize("name", ["S5", "SL(2,5)", "A5xC2"])
def test_components_match_oracle(name):
    G = GROUPS[name]
    n = G.degree
    elems = oracle.elements(G)
    subs = oracle.all_subgroups(elems, n)
    normal_in = {H: [N for N in subs if N <= H and oracle.is_normal(N, H)] for H in subs}
    subnormal = {frozenset(elems)}
    frontier = [frozenset(elems)]
    while frontier:
        H = frontier.pop()
        for N in normal_in.get(H, []):
            if N not in subnormal:
                subnormal.add(N)
                frontier.append(N)
    expected = []
    for K in subnormal:
        if len(K) > 1 and oracle.commutator_subgroup(K, K, n) == K:
            Z = oracle.centralizer(K, K)
            # perfect with simple central quotient: every normal subgroup is central or all of K
            if all(N <= Z or N == K for N in normal_in[K]):
                expected.append(len(K))
    assert sorted(K.order() for K in components(G)) == sorted(expected)


def test_simplicity_and_quasisimplicity():
    assert is_simple(GROUPS["A5"]) and is_simple(GROUPS["C7"])
    assert not is_simple(GROUPS["S5"])
    assert is_quasisimple(GROUPS["SL(2,5)"]) and not is_simple(GROUPS["SL(2,5)"])
    assert not is_quasisimple(GROUPS["A5xC2"])


def test_label_table():
    assert label_order("A5") == 60
    assert label_order("L2(8)") == 504
    # |A8| = |L3(4)| = 20160 is resolved by elements of order 15
    assert label_for(20160, True) == "A8"
    assert label_for(20160, False) == "L3(4)"


def test_analyze_report():
    rep = analyze(GROUPS["A5xS3"]).to_json()
    assert rep["order"] == 360
    assert rep["composition_factors"] == {"A5": 1, "C2": 1, "C3": 1}
    assert rep["is_kgroup"] is True
    assert rep["layer"]["order"] == 60


def test_trivial_group():
    G = PermGroup(3)
    assert components(G) == [] and solvable_radical(G).order() == 1
