import pytest

from pclose.constructions import (
    GF2k,
    block_shift,
    build_lg_example,
    build_power_action,
    build_psl2,
    build_sl23,
    build_sl25,
    power_group,
    psl2_order,
    verify_lg_example,
)
from pclose.errors import PreconditionError
from pclose.group import PermGroup
from pclose.structure import analyze, components


@pytest.mark.parametrize("k,order", [(2, 60), (3, 504), (4, 4080), (5, 32736)])
def test_psl2_orders(k, order):
    J, frob = build_psl2(k)
    assert J.degree == 2**k + 1
    assert J.order() == order == psl2_order(2**k)
    assert frob.order() == k
    assert PermGroup(J.degree, [frob]).normalizes(J)


def test_frobenius_centralizer_is_psl2_of_prime_field():
    J, frob = build_psl2(5)
    C = J.centralizer(PermGroup(J.degree, [frob]))
    assert C.order() == 6 and C.is_solvable()


def test_field_arithmetic():
    F = GF2k(5)
    w = F.generator
    x = 1
    seen = set()
    for _ in range(31):
        x = F.mul(x, w)
        seen.add(x)
    assert len(seen) == 31 and x == 1


def test_small_linear_groups():
    assert build_sl23().order() == 24
    S = build_sl25()
    assert S.order() == 120 and S.center().order() == 2


def test_power_constructions():
    A5 = PermGroup.alternating(5)
    assert power_group(A5, 3).order() == 60**3
    act = build_power_action(A5, "regular", prime=7)
    assert act.group.order() == 60**7 and act.coprime
    J, frob = build_psl2(3)
    # the Frobenius of L2(8) has order 3, which divides 504
    with pytest.raises(PreconditionError):
        build_power_action(J, "coordinatewise", prime=3, m=2, alpha=frob)
    J, frob = build_psl2(5)
    act = build_power_action(J, "coordinatewise", prime=5, m=2, alpha=frob)
    assert act.rank == 2 and act.coprime
    assert sorted(K.order() for K in components(act.group)) == [32736, 32736]
    mixed = build_power_action(J, "mixed", prime=5, alpha=frob)
    assert mixed.rank == 2 and mixed.group.order() == 32736**5
    with pytest.raises(PreconditionError):
        build_power_action(J, "diagonal", prime=5)
    with pytest.raises(PreconditionError):
        build_power_action(J, "spiral", prime=5, m=2, alpha=frob)


def test_block_shift():
    s = block_shift(2, 3)
    assert s.order() == 3 and list(s) == [2, 3, 4, 5, 0, 1]


def test_lg_example_r5():
    rep = verify_lg_example(build_lg_example(5))
    assert rep["passed"]
    assert [c["status"] for c in rep["claims"]] == ["pass"] * 5
    assert rep["claims"][0]["order"] == 6
    assert rep["claims"][1]["gcd"] == 1
    assert rep["claims"][2]["order"] == 648
    assert rep["notes"]  # 5 divides |A5|


def test_lg_example_variants():
    rep = verify_lg_example(build_lg_example(5, "L2(7)"))
    assert rep["passed"] and not rep["notes"]
    rep = verify_lg_example(build_lg_example(7))
    assert rep["passed"]
    assert rep["claims"][0]["order"] == 6
    with pytest.raises(PreconditionError):
        build_lg_example(3)
    with pytest.raises(PreconditionError):
        build_lg_example(5, "Q99")


def test_psl2_32_report():
    J, _ = build_psl2(5)
    rep = analyze(J).to_json()
    assert rep["composition_factors"] == {"L2(32)": 1}
