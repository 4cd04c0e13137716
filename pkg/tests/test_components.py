import pytest

from pclose.actions import CoprimeAction
from pclose.components import a_components, comp_ap, comp_p, embed_in_asol, is_ap_component, is_p_component
from pclose.corpus import a5_power_regular, a5_squared_swap, seed_groups, small_actions
from pclose.errors import PreconditionError
from pclose.group import PermGroup
from pclose.properties import get_property

GROUPS = dict(seed_groups())
ACTIONS = dict(small_actions())
SOL, NIL, TRIV = (get_property(n) for n in ("solvable", "nilpotent", "trivial"))


def _orders(res):
    return sorted(K.order() for K in res.members)


def test_p_components_frozen():
    assert _orders(comp_p(GROUPS["S5"], SOL)) == [60]
    assert _orders(comp_p(GROUPS["SL(2,5)"], NIL)) == [120]
    assert _orders(comp_p(GROUPS["SL(2,5)"], TRIV)) == [120]
    assert _orders(comp_p(GROUPS["S4"], SOL)) == []
    assert _orders(comp_p(GROUPS["A5xS4"], SOL)) == [60]
    assert comp_p(GROUPS["A5xS4"], SOL).layer.order() == 60


def test_sol_component_of_direct_product():
    # in A5 x C3 only the A5 factor is a sol-component; the whole group has O^sol = A5
    G = GROUPS["A5xC3"]
    (K,) = comp_p(G, SOL).members
    assert K.order() == 60 and is_p_component(G, K, SOL)
    assert not is_p_component(G, G, SOL)


def test_components_of_direct_power():
    act = a5_squared_swap()
    assert _orders(comp_p(act.group, SOL)) == [60, 60]
    # the swap fuses the two factors into one A-component
    assert _orders(a_components(act)) == [3600]
    assert _orders(comp_ap(act, act.group, SOL)) == [3600]


def test_regular_power_is_a_single_a_component():
    act = a5_power_regular()
    res = a_components(act)
    assert _orders(res) == [60**7]
    (K,) = res.members
    assert is_ap_component(act, act.group, K, TRIV)
    assert embed_in_asol(act, act.group, K, TRIV) == act.group


def test_embed_invariant_subgroup_components():
    act = ACTIONS["C7 on A5xC2^3"]
    G = act.group
    H = G  # A C_G(A)-invariant
    (K,) = comp_ap(act, H, SOL).members
    assert K.order() == 60
    M = embed_in_asol(act, H, K, SOL)
    assert M is not None and K.is_subgroup_of(M)


def test_embed_rejects_non_components():
    act = ACTIONS["C7 on A5xC2^3"]
    with pytest.raises(PreconditionError):
        embed_in_asol(act, act.group, act.group, SOL)


def test_non_subnormal_is_not_a_component():
    S5 = GROUPS["S5"]
    A4 = PermGroup(5, [[1, 2, 0, 3, 4], [0, 2, 3, 1, 4]])
    assert A4.order() == 12
    assert not is_p_component(S5, A4, SOL)
    assert not is_p_component(S5, PermGroup(5), SOL)


def test_comp_ap_requires_invariant_subgroup():
    act = ACTIONS["C2 swap C3^2"]
    first = PermGroup(6, [[1, 2, 0, 3, 4, 5]])
    with pytest.raises(PreconditionError):
        comp_ap(act, first, SOL)


def test_non_coprime_action_is_flagged():
    act = a5_squared_swap()
    assert isinstance(act, CoprimeAction) and not act.coprime
    with pytest.raises(PreconditionError):
        embed_in_asol(act, act.group, act.group, SOL)
