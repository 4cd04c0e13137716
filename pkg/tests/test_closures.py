import pytest

import oracle
from pclose.closures import (
    all_subgroups,
    enumerate_invariant_subgroups,
    fixed_points,
    invariant_direct_factors,
    is_near_ap,
    o_np_invariant,
    o_np_normal,
    o_p_invariant,
)
from pclose.corpus import a5_squared_swap, seed_groups, small_actions
from pclose.errors import PreconditionError
from pclose.group import PermGroup
from pclose.properties import get_property

ACTIONS = dict(small_actions())
GROUPS = dict(seed_groups())
ORACLE_ACTIONS = [
    "C2 on C3", "C3 on C2^2", "C3 on C7", "C2 on C15", "C2 inv C3^2", "C2 swap C3^2",
    "C3 on Q8", "C7 on C2^3", "C2^2 on C15", "C5 trivial on S4",
]


def _oracle_invariant_join(act, pred):
    n = act.group.degree
    elems = oracle.elements(act.group)
    actors = [tuple(a) for a in act.actor_basis]
    cga = oracle.centralizer(elems, actors)
    acting = actors + list(cga)
    good = [
        H
        for H in oracle.all_subgroups(elems, n)
        if all(oracle.conj(h, s) in H for s in acting for h in H) and pred(H)
    ]
    gens = [x for H in good for x in H]
    return oracle.closure(gens, n)


@pytest.mark.parametrize("name", ORACLE_ACTIONS)
def test_invariant_closure_matches_oracle(name):
    act = ACTIONS[name]
    n = act.group.degree
    for pname, pred in [
        ("pi:2", lambda H: oracle.pi_number(len(H), [2])),
        ("pi:3", lambda H: oracle.pi_number(len(H), [3])),
        ("odd-order", lambda H: len(H) % 2 == 1),
        ("solvable", lambda H: oracle.is_solvable(H, n)),
    ]:
        expected = _oracle_invariant_join(act, pred)
        assert o_p_invariant(act, get_property(pname)).order() == len(expected), (name, pname)


def test_subgroup_enumeration_frozen():
    assert len(all_subgroups(GROUPS["S4"])) == 30
    assert len(all_subgroups(GROUPS["A5"])) == 59


def test_invariant_family_of_inverted_c15():
    act = ACTIONS["C2 on C15"]
    fam = enumerate_invariant_subgroups(act)
    assert sorted(X.order() for X in fam.members) == [1, 3, 5, 15]
    five = enumerate_invariant_subgroups(act, filter=get_property("pi:5"))
    assert sorted(X.order() for X in five.members) == [1, 5]
    assert o_p_invariant(act, get_property("pi:5")).order() == 5
    assert o_p_invariant(act, get_property("pi:3")).order() == 3


def test_pointwise_stabilizer_family():
    act = ACTIONS["C2^2 on C15"]
    fam = enumerate_invariant_subgroups(act, ("ACGa", (1, 0)))
    assert sorted(X.order() for X in fam.members) == [1, 3, 5, 15]


def test_fixed_points():
    assert fixed_points(a5_squared_swap()).order() == 60
    assert fixed_points(ACTIONS["C3 on C7"]).order() == 1
    assert fixed_points(ACTIONS["C7 on A5xC2^3"]).order() == 60
    assert fixed_points(ACTIONS["C3 on Q8"]).order() == 2


def test_near_closures():
    sol = get_property("solvable")
    frob = ACTIONS["C3 on C7"]
    assert is_near_ap(frob, frob.group, get_property("trivial"))
    triv = ACTIONS["C7 trivial on A5"]
    assert not is_near_ap(triv, triv.group, sol)
    assert o_np_invariant(triv, sol).order() == 1
    assert o_np_normal(triv, sol).order() == 1
    mixed = ACTIONS["C7 on A5xC2^3"]
    assert o_np_invariant(mixed, sol).order() == 8
    assert o_np_normal(mixed, sol).order() == 8
    assert o_np_invariant(mixed, get_property("cf:A5")).order() == 480


def test_o_np_is_at_least_o_p():
    sol = get_property("solvable")
    for name in ORACLE_ACTIONS:
        act = ACTIONS[name]
        assert o_p_invariant(act, sol).is_subgroup_of(o_np_invariant(act, sol))


def test_closure_argument_checks():
    act = ACTIONS["C2 swap C3^2"]
    first = PermGroup(6, [[1, 2, 0, 3, 4, 5]])
    with pytest.raises(PreconditionError):
        o_p_invariant(act, get_property("pi:3"), first)
    with pytest.raises(PreconditionError):
        o_np_invariant(act, get_property("nilpotent"))


@pytest.mark.parametrize("name", ["C2^2 on C15", "C2^3 on C3^3", "C3^2 on C7^2", "C7 on A5xC2^3", "C3 on Q8"])
def test_large_group_paths_agree_with_tables(name, monkeypatch):
    act = ACTIONS[name]
    props = ["pi:2", "pi:3", "solvable", "odd-order"]
    expected = {p: o_p_invariant(act, get_property(p)).order() for p in props}
    near = o_np_invariant(act, get_property("cf:A5")).order()
    # force the orbit-atom and direct-factor paths on a fresh copy of the action
    monkeypatch.setenv("PCLOSE_ORACLE_BOUND", "1")
    fresh = dict(small_actions())[name]
    assert {p: o_p_invariant(fresh, get_property(p)).order() for p in props} == expected
    assert o_np_invariant(fresh, get_property("cf:A5")).order() == near


def test_invariant_direct_factors():
    act = ACTIONS["C2^2 on C15"]
    assert sorted(K.order() for K in invariant_direct_factors(act, act.group)) == [3, 5]
    swap = ACTIONS["C2 swap C3^2"]
    assert [K.order() for K in invariant_direct_factors(swap, swap.group)] == [9]
