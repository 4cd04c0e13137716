"""Deterministic instance corpus: seed groups, coprime actions and functors,
organized in tiers small / structured / large."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Any

from .actions import CoprimeAction
from .constructions import (
    GF2k,
    build_power_action,
    build_psl2,
    build_sl23,
    build_sl25,
    trivial_action,
)
from .group import PermGroup, direct_product
from .perm import Permutation

TIERS = ("small", "structured", "large")


@dataclass
class Instance:
    id: str
    tier: str
    group: PermGroup
    action: CoprimeAction | None = None
    functor: Any = None

    @property
    def kind(self) -> str:
        if self.functor is not None:
            return "functor"
        if self.action is not None:
            return "action"
        return "group"

    def describe(self) -> dict:
        from .textio import format_action_spec, format_functor_spec, format_group_spec

        out = {"id": self.id, "kind": self.kind, "order": self.group.order()}
        if self.functor is not None:
            out["spec"] = format_functor_spec(self.functor)
        elif self.action is not None:
            out["spec"] = format_action_spec(self.action)
        else:
            out["spec"] = format_group_spec(self.group)
        return out


# -- seed groups -----------------------------------------------------------------------


def cyclic(n: int) -> PermGroup:
    return PermGroup.cyclic(n)


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n on n points."""
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return PermGroup(n, [rot, ref])


def quaternion() -> PermGroup:
    return build_sl23().derived_subgroup()


def affine_cyclic(p: int, k: int) -> PermGroup:
    """x -> x + 1 and x -> k x on Z/p."""
    return PermGroup(p, [[(i + 1) % p for i in range(p)], [(k * i) % p for i in range(p)]])


def heisenberg3() -> PermGroup:
    """Extraspecial group of order 27 and exponent 3 on F_3^2."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    idx = {v: i for i, v in enumerate(pts)}
    t1 = [idx[((x + 1) % 3, y)] for x, y in pts]
    t2 = [idx[(x, (y + 1) % 3)] for x, y in pts]
    shear = [idx[(x, (y + x) % 3)] for x, y in pts]
    return PermGroup(9, [t1, t2, shear])


def elementary_abelian(p: int, k: int) -> PermGroup:
    return direct_product(*[cyclic(p) for _ in range(k)])


def seed_groups() -> list[tuple[str, PermGroup]]:
    """Small groups of the small tier, keyed by a readable name."""
    S3 = PermGroup.symmetric(3)
    A4 = PermGroup.alternating(4)
    S4 = PermGroup.symmetric(4)
    A5 = PermGroup.alternating(5)
    return [
        ("C1", PermGroup(1)),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C2^2", elementary_abelian(2, 2)),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", S3),
        ("C7", cyclic(7)),
        ("C8", cyclic(8)),
        ("C2xC4", direct_product(cyclic(2), cyclic(4))),
        ("C2^3", elementary_abelian(2, 3)),
        ("D8", dihedral(4)),
        ("Q8", quaternion()),
        ("C9", cyclic(9)),
        ("C3^2", elementary_abelian(3, 2)),
        ("D10", dihedral(5)),
        ("A4", A4),
        ("D12", dihedral(6)),
        ("C15", cyclic(15)),
        ("F20", affine_cyclic(5, 2)),
        ("F21", affine_cyclic(7, 2)),
        ("S4", S4),
        ("SL(2,3)", build_sl23()),
        ("C3^3", elementary_abelian(3, 3)),
        ("3^(1+2)", heisenberg3()),
        ("S3xS3", direct_product(S3, S3)),
        ("C3xS3", direct_product(cyclic(3), S3)),
        ("D8xC3", direct_product(dihedral(4), cyclic(3))),
        ("A4xC2", direct_product(A4, cyclic(2))),
        ("S4xC2", direct_product(S4, cyclic(2))),
        ("A5", A5),
        ("S5", PermGroup.symmetric(5)),
        ("SL(2,5)", build_sl25()),
        ("A5xC2", direct_product(A5, cyclic(2))),
        ("A5xC3", direct_product(A5, cyclic(3))),
        ("L2(7)", _psl27()),
        ("A5xS3", direct_product(A5, S3)),
        ("A6", PermGroup.alternating(6)),
        ("S6", PermGroup.symmetric(6)),
        ("A5xS4", direct_product(A5, S4)),
        ("A7", PermGroup.alternating(7)),
        ("S7", PermGroup.symmetric(7)),
    ]


def _psl27() -> PermGroup:
    # PSL(2,7) on the projective line: points 0..6 and infinity = 7
    inf = 7
    t = [(x + 1) % 7 for x in range(7)] + [inf]
    s = [(2 * x) % 7 for x in range(7)] + [inf]
    u = [inf] + [(-pow(x, -1, 7)) % 7 for x in range(1, 7)] + [0]
    return PermGroup(8, [t, s, u])


def axiom_seed_groups() -> list[PermGroup]:
    """Groups used to validate declared property axioms: every group of order
    at most 24 in the seed list plus a few nonsolvable ones."""
    names = {
        "C1", "C2", "C3", "C4", "C2^2", "C5", "C6", "S3", "C7", "C8", "C2xC4", "C2^3",
        "D8", "Q8", "C9", "C3^2", "D10", "A4", "D12", "C15", "F20", "F21", "S4",
        "SL(2,3)", "3^(1+2)", "A5", "S5", "A5xC2",
    }
    return [G for name, G in seed_groups() if name in names]


# -- coprime actions -------------------------------------------------------------------


def _perm_on(n: int, pieces: dict[int, int]) -> Permutation:
    img = list(range(n))
    for i, j in pieces.items():
        img[i] = j
    return Permutation(img)


def _cyclic_blocks(p: int, k: int):
    """C_p^k on k blocks of p points; generators and per-block maps helper."""
    n = p * k
    gens = [_perm_on(n, {b * p + i: b * p + (i + 1) % p for i in range(p)}) for b in range(k)]
    return n, gens


def _scale_block(n: int, p: int, block: int, c: int) -> Permutation:
    return _perm_on(n, {block * p + i: block * p + (c * i) % p for i in range(p)})


def _compose(*ps) -> Permutation:
    out = ps[0]
    for p in ps[1:]:
        out = out * p
    return out


def inverting_c15() -> CoprimeAction:
    G = cyclic(15)
    a = [(-i) % 15 for i in range(15)]
    return CoprimeAction.build(G, [a], 2, name="C2 inverting C15")


def inverting_c3sq() -> CoprimeAction:
    n, gens = _cyclic_blocks(3, 2)
    a = _compose(_scale_block(n, 3, 0, 2), _scale_block(n, 3, 1, 2))
    return CoprimeAction.build(PermGroup(n, gens), [a], 2, name="C2 inverting C3^2")


def swapping_c3sq() -> CoprimeAction:
    n, gens = _cyclic_blocks(3, 2)
    a = [(i + 3) % 6 for i in range(6)]
    return CoprimeAction.build(PermGroup(n, gens), [a], 2, name="C2 swapping the factors of C3^2")


def c3cube_coordinatewise() -> CoprimeAction:
    n, gens = _cyclic_blocks(3, 3)
    basis = [_scale_block(n, 3, b, 2) for b in range(3)]
    return CoprimeAction.build(PermGroup(n, gens), basis, 2, name="C2^3 inverting the coordinates of C3^3")


def c15_rank2() -> CoprimeAction:
    # C3 on points 0..2, C5 on points 3..7
    g3 = _perm_on(8, {0: 1, 1: 2, 2: 0})
    g5 = _perm_on(8, {3 + i: 3 + (i + 1) % 5 for i in range(5)})
    a1 = _perm_on(8, {1: 2, 2: 1})
    a2 = _perm_on(8, {3 + i: 3 + (-i) % 5 for i in range(5)})
    return CoprimeAction.build(PermGroup(8, [g3, g5]), [a1, a2], 2, name="C2^2 inverting C3 and C5 separately")


def c7sq_coordinatewise() -> CoprimeAction:
    n, gens = _cyclic_blocks(7, 2)
    basis = [_scale_block(n, 7, b, 2) for b in range(2)]
    return CoprimeAction.build(PermGroup(n, gens), basis, 3, name="C3^2 acting on C7^2 coordinatewise")


def v4_by_c3() -> CoprimeAction:
    G = PermGroup(4, [[1, 0, 3, 2], [2, 3, 0, 1]])
    return CoprimeAction.build(G, [[0, 2, 3, 1]], 3, name="C3 on C2^2")


def q8_by_c3() -> CoprimeAction:
    S = build_sl23()
    Q = S.derived_subgroup()
    a = next(g for g in S.elements() if g.order() == 3)
    return CoprimeAction.build(Q, [a], 3, name="C3 on Q8")


def c3_by_c2() -> CoprimeAction:
    return CoprimeAction.build(cyclic(3), [[0, 2, 1]], 2, name="C2 inverting C3")


def c7_by_c3() -> CoprimeAction:
    return CoprimeAction.build(cyclic(7), [[(2 * i) % 7 for i in range(7)]], 3, name="C3 on C7")


def c11_by_c5() -> CoprimeAction:
    return CoprimeAction.build(cyclic(11), [[(3 * i) % 11 for i in range(11)]], 5, name="C5 on C11")


def e8_by_c7() -> CoprimeAction:
    F = GF2k(3)
    w = F.generator
    trans = [[x ^ (1 << b) for x in range(8)] for b in range(3)]
    mult = [F.mul(w, x) for x in range(8)]
    return CoprimeAction.build(PermGroup(8, trans), [mult], 7, name="C7 on C2^3")


def a5_e8_by_c7() -> CoprimeAction:
    F = GF2k(3)
    w = F.generator
    n = 13
    A5 = PermGroup.alternating(5)
    gens = [tuple(g) + tuple(range(5, 13)) for g in A5.generators]
    gens += [tuple(range(5)) + tuple(5 + (x ^ (1 << b)) for x in range(8)) for b in range(3)]
    a = tuple(range(5)) + tuple(5 + F.mul(w, x) for x in range(8))
    return CoprimeAction.build(PermGroup(n, gens), [a], 7, name="C7 on A5 x C2^3, trivial on A5")


def a5_squared_swap() -> CoprimeAction:
    """Not coprime; used only where coprimality is not assumed."""
    G = direct_product(PermGroup.alternating(5), PermGroup.alternating(5))
    a = [(i + 5) % 10 for i in range(10)]
    return CoprimeAction.build(G, [a], 2, name="C2 swapping the factors of A5 x A5", require_coprime=False)


def small_actions() -> list[tuple[str, CoprimeAction]]:
    return [
        ("C2 on C3", c3_by_c2()),
        ("C3 on C2^2", v4_by_c3()),
        ("C3 on C7", c7_by_c3()),
        ("C2 on C15", inverting_c15()),
        ("C2 inv C3^2", inverting_c3sq()),
        ("C2 swap C3^2", swapping_c3sq()),
        ("C3 on Q8", q8_by_c3()),
        ("C5 on C11", c11_by_c5()),
        ("C7 on C2^3", e8_by_c7()),
        ("C2^2 on C15", c15_rank2()),
        ("C3^2 on C7^2", c7sq_coordinatewise()),
        ("C2^3 on C3^3", c3cube_coordinatewise()),
        ("C5 trivial on S4", trivial_action(PermGroup.symmetric(4), 5, name="C5 acting trivially on S4")),
        ("C7 trivial on A5", trivial_action(PermGroup.alternating(5), 7, name="C7 acting trivially on A5")),
        ("C7 trivial on S5", trivial_action(PermGroup.symmetric(5), 7, name="C7 acting trivially on S5")),
        ("C7 trivial on SL(2,5)", trivial_action(build_sl25(), 7, name="C7 acting trivially on SL(2,5)")),
        ("C7 on A5xC2^3", a5_e8_by_c7()),
        ("C2 swap A5^2", a5_squared_swap()),
    ]


# -- structured and large instances ------------------------------------------------------


def frobenius_psl2_32() -> CoprimeAction:
    J, frob = build_psl2(5)
    return CoprimeAction.build(J, [frob], 5, name="Frobenius C5 on L2(32)")


def a5_power_regular() -> CoprimeAction:
    return build_power_action(PermGroup.alternating(5), "regular", prime=7, rank=1, name="C7 permuting A5^7 regularly")


def psl2_32_cube() -> CoprimeAction:
    J, frob = build_psl2(5)
    return build_power_action(J, "coordinatewise", prime=5, m=3, alpha=frob, name="C5^3 on L2(32)^3 coordinatewise")


def psl2_32_fifth_mixed() -> CoprimeAction:
    J, frob = build_psl2(5)
    return build_power_action(J, "mixed", prime=5, alpha=frob, name="C5^2 on L2(32)^5, shift and Frobenius")


# -- tiers ------------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def generate_corpus(tier: str) -> tuple[Instance, ...]:
    from .signalizer import standard_functors

    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}")
    out: list[Instance] = []
    if tier == "small":
        for name, G in seed_groups():
            out.append(Instance(f"group:{name}", tier, G))
        for name, act in small_actions():
            out.append(Instance(f"action:{name}", tier, act.group, act))
        for name, act in small_actions():
            if not act.coprime:
                continue
            for fname, f in standard_functors(act):
                out.append(Instance(f"functor:{name}:{fname}", tier, act.group, act, f))
    elif tier == "structured":
        for k in (2, 3, 4, 5):
            J, _ = build_psl2(k)
            out.append(Instance(f"group:L2({2**k})", tier, J))
        out.append(Instance("group:SL(2,5)", tier, build_sl25()))
        act = frobenius_psl2_32()
        out.append(Instance("action:Frobenius C5 on L2(32)", tier, act.group, act))
        act = a5_power_regular()
        out.append(Instance("action:C7 on A5^7", tier, act.group, act))
    else:
        act = psl2_32_cube()
        out.append(Instance("action:C5^3 on L2(32)^3", tier, act.group, act))
        for fname, f in standard_functors(act, which=("centralizer",)):
            out.append(Instance(f"functor:C5^3 on L2(32)^3:{fname}", tier, act.group, act, f))
        act = psl2_32_fifth_mixed()
        out.append(Instance("action:C5^2 on L2(32)^5", tier, act.group, act))
    return tuple(out)
