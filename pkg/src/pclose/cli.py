"""Command-line interface.

Groups, actions and functors are given either as a path to a spec file or
as a corpus instance id (``group:S4``, ``action:C2 on C15``,
``functor:C2^3 on C3^3:centralizer``); plain seed names such as ``S4`` are
also accepted for groups.

Exit codes: 0 all checks pass, 1 findings or failed verification,
2 usage or resource error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import PcloseError, ResourceLimitError

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _find_instance(ref: str):
    from .corpus import TIERS, generate_corpus

    for tier in TIERS:
        for inst in generate_corpus(tier):
            if inst.id == ref:
                return inst
    return None


def _read(ref: str) -> str | None:
    if os.path.isfile(ref):
        with open(ref) as fh:
            return fh.read()
    return None


def load_group(ref: str):
    from .textio import parse_action_spec, parse_group_spec

    text = _read(ref)
    if text is not None:
        if "actors:" in text:
            return parse_action_spec(text, require_coprime=False).group
        return parse_group_spec(text)
    inst = _find_instance(ref) or _find_instance(f"group:{ref}")
    if inst is None:
        raise UsageError(f"no group spec file or corpus instance named {ref!r}")
    return inst.group


def load_action(ref: str):
    from .textio import parse_action_spec

    text = _read(ref)
    if text is not None:
        return parse_action_spec(text, require_coprime=False)
    inst = _find_instance(ref) or _find_instance(f"action:{ref}")
    if inst is None or inst.action is None:
        raise UsageError(f"no action spec file or corpus action named {ref!r}")
    return inst.action


def load_functor(ref: str):
    from .textio import parse_functor_spec

    text = _read(ref)
    if text is not None:
        return parse_functor_spec(text)
    inst = _find_instance(ref) or _find_instance(f"functor:{ref}")
    if inst is None or inst.functor is None:
        raise UsageError(f"no functor spec file or corpus functor named {ref!r}")
    return inst.functor


# -- commands -------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    from .structure import analyze

    _emit(analyze(load_group(args.group)).to_json(), args.json)
    return EXIT_OK


def cmd_components(args) -> int:
    from .components import comp_ap, comp_p
    from .properties import get_property

    P = get_property(args.property)
    if args.action:
        act = load_action(args.action)
        res = comp_ap(act, act.group, P)
    else:
        res = comp_p(load_group(args.group), P)
    _emit(res.to_json(), args.json)
    return EXIT_OK


def cmd_closure(args) -> int:
    from . import closures
    from .properties import get_property, o_p, o_pe, o_upper_p
    from .textio import group_to_json

    P = get_property(args.property)
    if args.kind in ("o_p", "o_upper_p", "o_pe"):
        if not args.group:
            raise UsageError(f"--kind {args.kind} needs a group")
        fn = {"o_p": o_p, "o_upper_p": o_upper_p, "o_pe": o_pe}[args.kind]
        res = fn(load_group(args.group), P)
    else:
        if not args.action:
            raise UsageError(f"--kind {args.kind} needs --action")
        act = load_action(args.action)
        fn = {
            "invariant": closures.o_p_invariant,
            "near": closures.o_np_invariant,
            "near-normal": closures.o_np_normal,
        }[args.kind]
        res = fn(act, P)
    _emit({"kind": args.kind, "property": P.name, "result": group_to_json(res)}, args.json)
    return EXIT_OK


def cmd_functor(args) -> int:
    from . import signalizer as sig
    from .textio import format_functor_spec, parse_word

    f = load_functor(args.functor)
    op = args.op
    if op == "verify":
        rep = sig.functor_verify(f)
        _emit(rep.to_json(), args.json)
        return EXIT_OK if rep.passed else EXIT_FINDINGS
    if op == "complete":
        rep = sig.completeness(f)
        _emit(rep.to_json(), args.json)
        return EXIT_OK if rep.complete else EXIT_FINDINGS
    if op == "derive":
        d = sig.derive_functor(f, args.mode, args.property)
        _emit({"functor": format_functor_spec(d.functor), "report": d.report.to_json()}, args.json)
        return EXIT_OK if d.report.passed else EXIT_FINDINGS
    if op == "psi":
        if not args.t:
            raise UsageError("functor psi needs --t <actor word>")
        t = parse_word(args.t, f.action.rank, f.action.prime)
        psi = sig.subfunctor_psi(f, t)
        rep = sig.verify_subfunctor(psi, f)
        _emit({"functor": format_functor_spec(psi), "report": rep.to_json()}, args.json)
        return EXIT_OK if rep.passed else EXIT_FINDINGS
    rep = sig.gorenstein_lyons_check(f)
    _emit(rep.to_json(), args.json)
    return EXIT_OK if rep.passed else EXIT_FINDINGS


def cmd_construct(args) -> int:
    from .actions import CoprimeAction
    from .constructions import build_power_action, build_psl2
    from .textio import format_action_spec

    J, frob = build_psl2(args.k)
    if args.what == "psl2":
        act = CoprimeAction.build(J, [frob], args.k, name=f"Frobenius on L2({2**args.k})", require_coprime=False)
    else:
        act = build_power_action(
            J, args.pattern, prime=args.prime or args.k, m=args.m, rank=args.rank, alpha=frob
        )
    text = format_action_spec(act)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_example(args) -> int:
    from .constructions import build_lg_example, verify_lg_example

    rep = verify_lg_example(build_lg_example(args.r, args.K))
    _emit(rep, args.json)
    return EXIT_OK if rep["passed"] else EXIT_FINDINGS


def cmd_suite(args) -> int:
    from .suites import SUITES, run_suite, suite_ids

    if args.op == "list":
        for sid in suite_ids():
            s = SUITES[sid]
            tag = " (planted violation)" if s.planted else ""
            print(f"{sid}\t{s.description}{tag}")
        return EXIT_OK
    if not args.id:
        raise UsageError("suite run needs --id")
    ids = suite_ids() if args.id == "all" else [args.id]
    unknown = [i for i in ids if i not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}")
    workers = args.workers or os.cpu_count() or 1
    results = []
    for sid in ids:
        res = run_suite(sid, args.tier, args.seed, workers=workers)
        print(res.summary(), file=sys.stderr)
        results.append(res)
    if args.json:
        payload = results[0].to_json() if len(results) == 1 else [r.to_json() for r in results]
        _emit(payload, args.json)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FINDINGS


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pclose", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="structure report of a group")
    a.add_argument("group")
    a.add_argument("--json")
    a.set_defaults(fn=cmd_analyze)

    c = sub.add_parser("components", help="P-components, or (A,P)-components with --action")
    c.add_argument("group", nargs="?")
    c.add_argument("--property", default="solvable")
    c.add_argument("--action")
    c.add_argument("--json")
    c.set_defaults(fn=cmd_components)

    cl = sub.add_parser("closure", help="closure operators")
    cl.add_argument("group", nargs="?")
    cl.add_argument("--kind", default="o_p", choices=["o_p", "o_upper_p", "o_pe", "invariant", "near", "near-normal"])
    cl.add_argument("--property", default="solvable")
    cl.add_argument("--action")
    cl.add_argument("--json")
    cl.set_defaults(fn=cmd_closure)

    f = sub.add_parser("functor", help="signalizer functor operations")
    f.add_argument("op", choices=["verify", "complete", "derive", "psi", "glcheck"])
    f.add_argument("functor")
    f.add_argument("--mode", default="P", choices=["P", "nP"])
    f.add_argument("--property", default="solvable")
    f.add_argument("--t", help="actor word such as a1 or a1*a2")
    f.add_argument("--json")
    f.set_defaults(fn=cmd_functor)

    k = sub.add_parser("construct", help="emit an action spec")
    k.add_argument("what", choices=["psl2", "power"])
    k.add_argument("--k", type=int, default=5, help="field GF(2^k)")
    k.add_argument("--pattern", default="coordinatewise", choices=["regular", "diagonal", "coordinatewise", "mixed"])
    k.add_argument("--prime", type=int)
    k.add_argument("--m", type=int, default=3)
    k.add_argument("--rank", type=int, default=1)
    k.add_argument("--out")
    k.set_defaults(fn=cmd_construct)

    e = sub.add_parser("example", help="verify the PSL(2,2^r) wreath example")
    e.add_argument("which", choices=["lg"])
    e.add_argument("--r", type=int, default=5)
    e.add_argument("--K", default="A5")
    e.add_argument("--json")
    e.set_defaults(fn=cmd_example)

    s = sub.add_parser("suite", help="run or list claim suites")
    s.add_argument("op", choices=["run", "list"])
    s.add_argument("--id")
    s.add_argument("--tier", default="small", choices=["small", "structured", "large"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=0, help="worker processes (default: all cores)")
    s.add_argument("--json")
    s.set_defaults(fn=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ResourceLimitError, PcloseError, KeyError) as e:
        print(f"pclose: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
