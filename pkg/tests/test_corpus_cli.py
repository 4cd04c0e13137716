import json

import pytest

from pclose import suites
from pclose.cli import main
from pclose.constructions import trivial_action
from pclose.corpus import c3cube_coordinatewise, generate_corpus, seed_groups, small_actions
from pclose.group import PermGroup
from pclose.properties import get_property
from pclose.signalizer import centralizer_functor
from pclose.textio import (
    format_action_spec,
    format_functor_spec,
    format_group_spec,
    parse_action_spec,
    parse_functor_spec,
    parse_group_spec,
    parse_word,
)

GROUPS = dict(seed_groups())
ACTIONS = dict(small_actions())


def test_corpus_contents():
    small = {inst.id for inst in generate_corpus("small")}
    assert {"group:S4", "group:A5", "action:C2 on C15", "functor:C2^3 on C3^3:centralizer"} <= small
    large = [inst.id for inst in generate_corpus("large")]
    assert "functor:C5^3 on L2(32)^3:centralizer" in large
    assert max(inst.group.order() for inst in generate_corpus("small")) == 5040
    with pytest.raises(ValueError):
        generate_corpus("huge")


def test_corpus_is_deterministic():
    a = [inst.describe() for inst in generate_corpus("small")]
    generate_corpus.cache_clear()
    b = [inst.describe() for inst in generate_corpus("small")]
    assert a == b


def test_spec_round_trips():
    G = GROUPS["SL(2,3)"]
    assert parse_group_spec(format_group_spec(G)) == G
    act = ACTIONS["C2^2 on C15"]
    back = parse_action_spec(format_action_spec(act))
    assert back.group == act.group and back.actors == act.actors and back.prime == 2
    f = centralizer_functor(c3cube_coordinatewise())
    g = parse_functor_spec(format_functor_spec(f))
    assert all(g.value(v) == f.value(v) for v in f.vectors)
    assert parse_word("a1*a3", 3, 2) == (1, 0, 1)


def test_hypothesis_predicates():
    assert suites.hyp_a_simple(ACTIONS["C3 on C2^2"])
    assert not suites.hyp_a_simple(ACTIONS["C2 on C15"])
    assert suites.hyp_lglob3(get_property("nilpotent"))
    assert not suites.hyp_lglob3(get_property("solvable"))
    assert suites.hyp_noncyclic(ACTIONS["C2^2 on C15"])
    assert not suites.hyp_noncyclic(ACTIONS["C2 on C15"])
    act = ACTIONS["C7 trivial on A5"]
    assert suites.hyp_t_trivial_on_compsol(act, act.actor_basis[0], act.group)
    swap = ACTIONS["C2 swap A5^2"]
    assert not suites.hyp_t_trivial_on_compsol(swap, swap.actor_basis[0], swap.group)


def test_run_suite_basic():
    res = suites.run_suite("pc:3(b)")
    assert res.ok and res.instances_run == res.passed + res.skipped > 0
    data = json.loads(res.dumps())
    assert data["schema_version"] == 1 and "wall_time" not in data
    empty = suites.run_suite("md:5", tier="structured")
    assert empty.instances_run == 0 and empty.ok
    with pytest.raises(KeyError):
        suites.run_suite("no:such")


def test_planted_finding_has_witness():
    res = suites.run_suite("axioms:abelian")
    assert [f.instance for f in res.findings] == ["group:D8"]
    (f,) = res.findings
    assert f.kind == "planted" and not res.violations()
    assert f.witness["instance"]["order"] == 8


def test_skip_reasons_are_counted():
    res = suites.run_suite("md:3")
    assert res.skipped == sum(res.skip_reasons.values())
    assert res.skip_reasons.get("A is cyclic", 0) > 0


def test_parallel_matches_serial():
    a = suites.run_suite("pc:4(d)", workers=1).dumps()
    b = suites.run_suite("pc:4(d)", workers=2).dumps()
    assert a == b


def test_trivial_action_is_not_coprime_when_orders_share_a_prime():
    act = trivial_action(PermGroup.symmetric(5), 5)
    assert not act.coprime


# -- CLI -----------------------------------------------------------------------------------------


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_analyze(capsys, tmp_path):
    code, out, _ = _run(capsys, "analyze", "S5")
    assert code == 0 and json.loads(out)["order"] == 120
    spec = tmp_path / "g.txt"
    spec.write_text(format_group_spec(GROUPS["A4"]))
    code, out, _ = _run(capsys, "analyze", str(spec))
    assert code == 0 and json.loads(out)["order"] == 12


def test_cli_components_and_closures(capsys):
    code, out, _ = _run(capsys, "components", "S5")
    assert code == 0 and len(json.loads(out)["members"]) == 1
    code, out, _ = _run(capsys, "closure", "S4", "--property", "nilpotent")
    assert code == 0 and json.loads(out)["result"]["order"] == 4
    code, out, _ = _run(capsys, "closure", "--kind", "invariant", "--property", "pi:5", "--action", "C2 on C15")
    assert code == 0 and json.loads(out)["result"]["order"] == 5
    code, _, err = _run(capsys, "closure", "--kind", "invariant")
    assert code == 2 and "needs --action" in err


def test_cli_functor(capsys):
    ref = "C2^3 on C3^3:centralizer"
    assert _run(capsys, "functor", "verify", ref)[0] == 0
    assert _run(capsys, "functor", "complete", ref)[0] == 0
    assert _run(capsys, "functor", "derive", ref, "--mode", "P", "--property", "pi:2")[0] == 0
    assert _run(capsys, "functor", "psi", ref, "--t", "a1")[0] == 0
    assert _run(capsys, "functor", "glcheck", ref)[0] == 0
    assert _run(capsys, "functor", "psi", ref)[0] == 2
    assert _run(capsys, "functor", "verify", "nothing-here")[0] == 2


def test_cli_construct(capsys, tmp_path):
    out = tmp_path / "a.txt"
    assert _run(capsys, "construct", "psl2", "--k", "3", "--out", str(out))[0] == 0
    act = parse_action_spec(out.read_text(), require_coprime=False)
    assert act.group.order() == 504


def test_cli_suite(capsys, tmp_path):
    code, out, _ = _run(capsys, "suite", "list")
    assert code == 0 and "pc:3(b)" in out and "planted" in out
    report = tmp_path / "r.json"
    code, _, err = _run(capsys, "suite", "run", "--id", "pc:3(a)", "--workers", "1", "--json", str(report))
    assert code == 0 and "PASS" in err
    assert json.loads(report.read_text())["suite_id"] == "pc:3(a)"
    assert _run(capsys, "suite", "run", "--id", "axioms:abelian", "--workers", "1")[0] == 1
    assert _run(capsys, "suite", "run", "--id", "bogus")[0] == 2
