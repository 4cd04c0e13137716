import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from pclose.constructions import build_psl2, build_sl25
from pclose.corpus import dihedral, seed_groups
from pclose.errors import PreconditionError, ResourceLimitError
from pclose.group import PermGroup, direct_product, orbit_factors
from pclose.perm import Permutation, comm, conj, inv, mul, parse_cycles, format_cycles, power


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


def test_right_action_convention():
    p = Permutation.from_cycles(3, "(1 2)")
    q = Permutation.from_cycles(3, "(2 3)")
    # apply p then q: 1 -> 2 -> 3
    assert (p * q)(0) == 2
    assert conj(p, q) == mul(mul(inv(q), p), q)


def test_cycle_text_roundtrip():
    g = parse_cycles("(1 3 5)(2 4)", 6)
    assert format_cycles(g) == "(1 3 5)(2 4)"
    assert Permutation(g).order() == 6


def test_invalid_images_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


@given(perms(6), perms(6), perms(6))
def test_group_laws(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, inv(a)) == tuple(range(6))
    assert comm(a, b) == mul(inv(a), conj(a, b))


@given(perms(7), st.integers(-20, 20))
def test_power_matches_repeated_product(a, k):
    expected = tuple(range(7))
    base = a if k >= 0 else inv(a)
    for _ in range(abs(k)):
        expected = mul(expected, base)
    assert power(a, k) == expected


@pytest.mark.parametrize(
    "G,order",
    [
        (PermGroup.symmetric(5), 120),
        (PermGroup.alternating(6), 360),
        (PermGroup.symmetric(7), 5040),
        (dihedral(4), 8),
        (build_sl25(), 120),
        (build_psl2(3)[0], 504),
        (build_psl2(5)[0], 32736),
    ],
)
def test_orders(G, order):
    assert G.order() == order


@pytest.mark.parametrize("name", ["S4", "D8", "Q8", "A4", "F21", "SL(2,3)", "C3^2"])
def test_order_and_membership_match_enumeration(name):
    G = dict(seed_groups())[name]
    elems = oracle.elements(G)
    assert G.order() == len(elems)
    rng = random.Random(1)
    for _ in range(30):
        p = list(range(G.degree))
        rng.shuffle(p)
        assert G.contains(Permutation(p)) == (tuple(p) in elems)


@settings(max_examples=25, deadline=None)
@given(st.lists(perms(6), min_size=1, max_size=3))
def test_random_groups_agree_with_closure(gens):
    G = PermGroup(6, gens)
    elems = oracle.elements(G)
    assert G.order() == len(elems)
    assert math.factorial(6) % G.order() == 0
    x = gens[0]
    C = G.centralizer(PermGroup(6, [x]))
    assert C.order() == len(oracle.centralizer(elems, [x]))
    N = G.normal_closure([x])
    conjugates = {oracle.conj(x, g) for g in elems}
    assert N.order() == len(oracle.closure(list(conjugates), 6))


def test_normalizer_and_intersection():
    S4 = PermGroup.symmetric(4)
    H = PermGroup(4, [Permutation.from_cycles(4, "(1 2)")])
    assert S4.normalizer(H).order() == 4
    A4 = PermGroup.alternating(4)
    D = dihedral(4)
    assert A4.intersection(D).order() == 4


def test_quotient_and_homomorphism():
    S4 = PermGroup.symmetric(4)
    V = S4.normal_closure([Permutation.from_cycles(4, "(1 2)(3 4)")])
    Q, phi = S4.quotient(V)
    assert Q.order() == 6
    assert phi.kernel().order() == 4
    assert phi.verify()
    assert phi.preimage(Q, kernel=V).order() == 24


def test_subnormal_chain():
    S4 = PermGroup.symmetric(4)
    K = PermGroup(4, [Permutation.from_cycles(4, "(1 2)(3 4)")])
    assert S4.is_subnormal(K)
    assert [H.order() for H in S4.subnormal_chain(K)] == [24, 4, 2]
    A5 = PermGroup.alternating(5)
    assert not A5.is_subnormal(PermGroup(5, [Permutation.from_cycles(5, "(1 2 3)")]))


def test_subnormal_requires_subgroup():
    with pytest.raises(PreconditionError):
        PermGroup.alternating(4).is_subnormal(PermGroup(4, [Permutation.from_cycles(4, "(1 2)")]))


def test_degree_mismatch():
    with pytest.raises(PreconditionError):
        PermGroup.symmetric(4).contains(Permutation.identity(5))


def test_element_listing_bound(monkeypatch):
    monkeypatch.setenv("PCLOSE_ENUM_BOUND", "100")
    with pytest.raises(ResourceLimitError):
        PermGroup.symmetric(5).elements()


def test_orbit_factors_split_direct_products():
    G = direct_product(PermGroup.alternating(5), PermGroup.symmetric(4))
    facs = orbit_factors(G)
    assert sorted(F.order() for _, F in facs) == [24, 60]
    assert math.prod(F.order() for _, F in facs) == G.order()


def test_derived_and_lower_central_series():
    S4 = PermGroup.symmetric(4)
    assert [H.order() for H in S4.derived_series()] == [24, 12, 4, 1]
    assert [H.order() for H in S4.lower_central_series()] == [24, 12]
    assert dihedral(4).is_nilpotent()
    assert not PermGroup.alternating(5).is_solvable()
