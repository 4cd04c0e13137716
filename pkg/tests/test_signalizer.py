import pytest

from pclose import signalizer as sig
from pclose.corpus import c3cube_coordinatewise, c3_by_c2, generate_corpus, small_actions
from pclose.errors import PreconditionError
from pclose.group import PermGroup
from pclose.textio import format_word

ACTIONS = dict(small_actions())
FIRST = PermGroup(9, [[1, 2, 0, 3, 4, 5, 6, 7, 8]])
THIRD = PermGroup(9, [[0, 1, 2, 3, 4, 5, 7, 8, 6]])


@pytest.fixture(scope="module")
def cube():
    return sig.centralizer_functor(c3cube_coordinatewise())


def test_verify_centralizer_and_trivial(cube):
    assert sig.functor_verify(cube).passed
    assert sig.functor_verify(sig.trivial_functor(cube.action)).passed


def test_broken_functor_fails_balance(cube):
    rep = sig.functor_verify(sig.broken_functor(cube.action))
    assert not rep.passed
    assert any(f["claim"].startswith("balance") for f in rep.failures)


def test_values_depend_only_on_cyclic_subgroup():
    act = ACTIONS["C3^2 on C7^2"]
    f = sig.centralizer_functor(act)
    assert f.value((1, 1)) is f.value((2, 2))
    assert f.value((1, 2)) is f.value((2, 1))


def test_hyperplane_restriction(cube):
    act = cube.action
    B = act.subgroup_of_vectors([(1, 0, 0), (0, 1, 0)])
    assert sig.functor_restrict_hyperplane(cube, B) == THIRD
    assert sig.functor_restrict_hyperplane(sig.trivial_functor(act), B).is_trivial()
    with pytest.raises(PreconditionError):
        sig.functor_restrict_hyperplane(sig.centralizer_functor(c3_by_c2()), (1,))


def test_completeness(cube):
    rep = sig.completeness(cube)
    assert rep.complete and rep.closure.order() == 27
    assert rep.hyperplane_closure_match is True
    triv = sig.completeness(sig.trivial_functor(cube.action))
    assert triv.complete and triv.closure.is_trivial()


def test_derived_functors(cube):
    three = sig.derive_functor(cube, "P", "pi:3")
    assert three.report.passed
    assert all(three.functor.value(v) == cube.value(v) for v in cube.vectors)
    two = sig.derive_functor(cube, "P", "pi:2")
    assert two.report.passed
    assert all(two.functor.value(v).is_trivial() for v in cube.vectors)
    near = sig.derive_functor(cube, "nP", "solvable")
    assert near.report.passed
    assert all(near.functor.value(v) == cube.value(v) for v in cube.vectors)
    with pytest.raises(PreconditionError):
        sig.derive_functor(cube, "X", "solvable")


def test_psi_table(cube):
    psi = sig.subfunctor_psi(cube, (1, 0, 0))
    table = {format_word(v): psi.value(v) for v in psi.vectors}
    expected = {"a2": FIRST, "a3": FIRST, "a2*a3": FIRST}
    for word, H in table.items():
        assert H == expected.get(word, PermGroup(9)), word
    assert sig.verify_subfunctor(psi, cube).passed


def test_psi_trivial_cases(cube):
    psi = sig.subfunctor_psi(sig.trivial_functor(cube.action), (0, 1, 1))
    assert all(psi.value(v).is_trivial() for v in psi.vectors)
    act = ACTIONS["C7 trivial on A5"]
    f = sig.centralizer_functor(act)
    psi = sig.subfunctor_psi(f, (1,))
    assert all(psi.value(v).is_trivial() for v in psi.vectors)


def test_psi_on_every_small_functor():
    for inst in generate_corpus("small"):
        if inst.functor is None:
            continue
        f = inst.functor
        for t in f.vectors:
            assert sig.verify_subfunctor(sig.subfunctor_psi(f, t), f).passed, (inst.id, t)


def test_gl_check_small(cube):
    rep = sig.gorenstein_lyons_check(cube)
    assert rep.hypothesis and rep.complete and rep.passed
    assert set(rep.component_counts.values()) == {0}
    assert sig.gorenstein_lyons_check(sig.trivial_functor(cube.action)).passed
    with pytest.raises(PreconditionError):
        sig.gorenstein_lyons_check(sig.centralizer_functor(ACTIONS["C2^2 on C15"]))


def test_theta_subgroups(cube):
    assert sig.is_theta_subgroup(cube, cube.action.group)
    assert sig.is_theta_subgroup(cube, FIRST)
    assert not sig.is_theta_subgroup(sig.trivial_functor(cube.action), FIRST)


def test_size_metadata(cube):
    assert cube.size() == 3 * 9 + 3 * 3 + 1
    assert cube.theta_A().is_trivial()
