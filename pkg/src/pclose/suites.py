"""Executable claim suites over the instance corpus.

Each suite checks one claim on every applicable corpus instance.  An
instance either passes, is skipped (its hypotheses fail, or it is too large
for an oracle), or yields exactly one finding carrying a reproducible
witness.  Results are deterministic given (suite, tier, seed).
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .actions import CoprimeAction
from .closures import (
    enumerate_invariant_subgroups,
    fixed_points,
    is_invariant,
    is_near_ap,
    o_np_invariant,
    o_np_normal,
    o_p_invariant,
)
from .components import a_components, comp_ap, comp_p, embed_in_asol, is_ap_component, is_p_component
from .corpus import Instance, generate_corpus
from .enumerated import Enumerated
from .errors import ResourceLimitError, TheoremViolation
from .group import PermGroup, orbit_factors
from .properties import get_property, normal_subgroups, o_p, o_pe, o_upper_p, verify_axioms
from .signalizer import (
    SignalizerFunctor,
    acts_trivially_on,
    broken_functor,
    closure,
    completeness,
    derive_functor,
    functor_restrict_hyperplane,
    functor_verify,
    gorenstein_lyons_check,
    is_theta_subgroup,
    subfunctor_psi,
    verify_subfunctor,
)
from .simple import label_order
from .structure import components, is_simple, composition_factors, join_all, layer, solvable_radical
from .textio import group_to_json

SCHEMA_VERSION = 1

# properties satisfying the basic closure axioms
PC_PROPS = ("trivial", "nilpotent", "solvable", "odd-order", "pi:2", "pi:3")
# closed under subgroups, quotients and extensions
EXT_PROPS = ("trivial", "solvable", "odd-order", "pi:2", "pi:3", "pi:5")
# additionally every solvable group has the property
NEAR_PROPS = ("solvable", "cf:A5")
# properties for which every coprime action with P fixed points forces solvability
LGLOB3_PROPS = ("trivial", "nilpotent", "odd-order")

SAMPLE = 24


class Skip(Exception):
    """The instance does not meet the hypotheses of the claim."""


@dataclass
class Finding:
    instance: str
    claim: str
    kind: str
    witness: dict

    def to_json(self) -> dict:
        return {"instance": self.instance, "claim": self.claim, "kind": self.kind, "witness": self.witness}


@dataclass
class SuiteResult:
    suite_id: str
    tier: str
    seed: int
    instances_run: int = 0
    passed: int = 0
    skipped: int = 0
    findings: list[Finding] = field(default_factory=list)
    wall_time: float = 0.0
    skip_reasons: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.findings

    def violations(self) -> list[Finding]:
        return [f for f in self.findings if f.kind == "theorem-violation"]

    def to_json(self, with_time: bool = False) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "suite_id": self.suite_id,
            "tier": self.tier,
            "seed": self.seed,
            "instances_run": self.instances_run,
            "passed": self.passed,
            "skipped": self.skipped,
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
            "findings": [f.to_json() for f in self.findings],
        }
        if with_time:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self) -> str:
        """Deterministic report text (wall time omitted)."""
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FINDINGS"
        return (
            f"{self.suite_id} [{self.tier}] {status}: run={self.instances_run} passed={self.passed} "
            f"skipped={self.skipped} findings={len(self.findings)} ({self.wall_time:.1f}s)"
        )


@dataclass
class Suite:
    id: str
    description: str
    applies: Callable[[Instance], bool]
    check: Callable[[Instance, random.Random], None]
    planted: bool = False


SUITES: dict[str, Suite] = {}


def suite(sid: str, description: str, applies, planted: bool = False):
    def deco(fn):
        SUITES[sid] = Suite(sid, description, applies, fn, planted)
        return fn

    return deco


class Violation(Exception):
    def __init__(self, claim: str, witness: dict):
        super().__init__(claim)
        self.claim = claim
        self.witness = witness


def expect(ok: bool, claim: str, **witness) -> None:
    if not ok:
        raise Violation(claim, {k: _jsonable(v) for k, v in witness.items()})


def _jsonable(v):
    if isinstance(v, PermGroup):
        return group_to_json(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


# -- applicability ---------------------------------------------------------------------


def is_group(inst: Instance) -> bool:
    return inst.kind == "group"


def is_action(inst: Instance) -> bool:
    return inst.kind == "action"


def is_coprime_action(inst: Instance) -> bool:
    return inst.kind == "action" and inst.action.coprime


def is_functor(inst: Instance) -> bool:
    return inst.kind == "functor"


# -- hypothesis predicates ------------------------------------------------------------------


def hyp_a_simple(act: CoprimeAction) -> bool:
    """G is nontrivial and has no proper nontrivial A-invariant normal subgroup."""
    G = act.group
    if G.is_trivial():
        return False
    return all(N.is_trivial() or N.order() == G.order() for N in a_invariant_normal(act))


def hyp_lglob3(P) -> bool:
    """Every coprime action with P-group fixed points is on a solvable group.

    Accepted for the properties where this is a known consequence of the
    classification; not decided for others."""
    return P.name in LGLOB3_PROPS


def hyp_t_trivial_on_compsol(act: CoprimeAction, t, H: PermGroup) -> bool:
    """Conjugation by t fixes every sol-component of H."""
    return acts_trivially_on([t], comp_p(H, get_property("solvable")).members)


def hyp_noncyclic(act: CoprimeAction) -> bool:
    return act.rank >= 2


# -- shared helpers -----------------------------------------------------------------------


def subnormal_subgroups(G: PermGroup) -> list[PermGroup]:
    """All subnormal subgroups, by descent through normal-subgroup lattices."""
    found = {G.key(): G}
    queue = [G]
    while queue:
        H = queue.pop()
        for N in normal_subgroups(H):
            if N.key() not in found:
                found[N.key()] = N
                queue.append(N)
    return sorted(found.values(), key=lambda X: (X.order(), X.key()))


def _sample(items: list, rng: random.Random, k: int = SAMPLE) -> list:
    if len(items) <= k:
        return list(items)
    idx = sorted(rng.sample(range(len(items)), k))
    return [items[i] for i in idx]


def random_subgroups(G: PermGroup, rng: random.Random, k: int = 8) -> list[PermGroup]:
    out = [PermGroup(G.degree), G]
    for i in range(k):
        gens = [G.random_element(rng) for _ in range(1 + i % 2)]
        out.append(PermGroup(G.degree, gens))
    return out


def invariant_family(act: CoprimeAction, acting, H: PermGroup | None = None) -> list[PermGroup]:
    """Subgroups of H (default G) invariant under the given elements."""
    H = act.group if H is None else H
    enum = Enumerated(H)
    return [enum.group_of(m) for m in enum.invariant_subgroups(list(acting))]


def a_invariant_normal(act: CoprimeAction, H: PermGroup | None = None) -> list[PermGroup]:
    H = act.group if H is None else H
    return [N for N in normal_subgroups(H) if is_invariant(N, act.actor_basis)]


def quotient_fixed(act: CoprimeAction, X: PermGroup, N: PermGroup) -> PermGroup:
    """C_{X/N}(A) for A-invariant X with N normal in XA."""
    if N.is_trivial():
        return X.centralizer(act.actors)
    W = PermGroup(X.degree, list(X.generators) + list(act.actor_basis))
    Q, phi = W.quotient(N)
    Xb = phi.image(X)
    Ab = PermGroup(Q.degree, [phi(a) for a in act.actor_basis])
    return Xb.centralizer(Ab)


def _props(names) -> list:
    return [get_property(n) for n in names]


def _commutes_into(G: PermGroup, K: PermGroup, N: PermGroup, target: PermGroup) -> bool:
    return G.commutator(K, N).is_subgroup_of(target)


# -- engine oracles ---------------------------------------------------------------------------


@suite("engine:oracle", "order, membership, centralizer and normal closure against element enumeration",
       lambda inst: inst.kind in ("group", "action"))
def _engine_oracle(inst: Instance, rng: random.Random) -> None:
    G = inst.group
    if G.order() > 2000:
        raise Skip("oracle bound")
    elems = [tuple(g) for g in G.elements()]
    expect(len(set(elems)) == G.order(), "order matches enumeration", group=G)
    eset = set(elems)
    for _ in range(6):
        x = G.random_element(rng)
        expect(tuple(x) in eset, "random element is a member", group=G, element=list(x))
    from .perm import Permutation

    n = G.degree
    for _ in range(4):
        p = list(range(n))
        rng.shuffle(p)
        expect(G.contains(Permutation(p)) == (tuple(p) in eset), "membership agrees", group=G, element=p)
    for _ in range(3):
        x = G.random_element(rng)
        C = G.centralizer(PermGroup(n, [x]))
        brute = {g for g in elems if _mul(g, x) == _mul(x, g)}
        expect(C.order() == len(brute) and all(C.contains(Permutation(g)) for g in brute), "centralizer agrees", group=G, element=list(x))
        N = G.normal_closure([x])
        brute_n = _brute_normal_closure(elems, tuple(x))
        expect(N.order() == len(brute_n), "normal closure agrees", group=G, element=list(x))


def _mul(a, b):
    return tuple(b[i] for i in a)


def _brute_normal_closure(elems, x) -> set:
    conjs = set()
    for g in elems:
        inv = [0] * len(g)
        for i, j in enumerate(g):
            inv[j] = i
        conjs.add(_mul(_mul(tuple(inv), x), g))
    group = {tuple(range(len(x)))}
    frontier = list(group)
    while frontier:
        nxt = []
        for h in frontier:
            for c in conjs:
                y = _mul(h, c)
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return group


@suite("closure:oracle", "O_P and O^P against brute-force normal subgroup enumeration", is_group)
def _closure_oracle(inst: Instance, rng: random.Random) -> None:
    G = inst.group
    if G.order() > 2000:
        raise Skip("oracle bound")
    enum = Enumerated(G)
    normals = [enum.group_of(m) for m in enum.normal_subgroups()]
    for P in _props(("trivial", "nilpotent", "solvable", "odd-order", "pi:2", "pi:3")):
        good = [N for N in normals if P.predicate(N)]
        top = max(good, key=lambda N: N.order())
        expect(all(N.is_subgroup_of(top) for N in good), f"{P.name}: unique maximal normal P-subgroup", group=G)
        expect(o_p(G, P) == top, f"{P.name}: o_p matches the oracle", group=G, expected=top, got=o_p(G, P))
        low = [N for N in normals if P.holds_section(G, N)]
        bottom = min(low, key=lambda N: N.order())
        expect(all(bottom.is_subgroup_of(N) for N in low), f"{P.name}: unique minimal P-residual", group=G)
        expect(o_upper_p(G, P) == bottom, f"{P.name}: o_upper_p matches the oracle", group=G, expected=bottom)


# -- P-components ----------------------------------------------------------------------------


@suite("pc:3(a)", "O_P(G) contains every subnormal P-subgroup", is_group)
def _pc3a(inst, rng):
    G = inst.group
    subs = subnormal_subgroups(G)
    for P in _props(PC_PROPS):
        O = o_p(G, P)
        for N in subs:
            expect(not P.predicate(N) or N.is_subgroup_of(O), f"{P.name}: subnormal P-subgroup inside O_P(G)", group=G, N=N)


@suite("pc:3(b)", "O_P(N) = N meet O_P(G) for subnormal N", is_group)
def _pc3b(inst, rng):
    G = inst.group
    subs = subnormal_subgroups(G)
    for P in _props(PC_PROPS):
        O = o_p(G, P)
        for N in subs:
            expect(o_p(N, P) == N.intersection(O), f"{P.name}: O_P(N) = N meet O_P(G)", group=G, N=N)


@suite("pc:3(c)", "O_P(G) meet H lies in O_P(H)", is_group)
def _pc3c(inst, rng):
    G = inst.group
    hs = random_subgroups(G, rng)
    for P in _props(PC_PROPS):
        O = o_p(G, P)
        for H in hs:
            expect(O.intersection(H).is_subgroup_of(o_p(H, P)), f"{P.name}: O_P(G) meet H <= O_P(H)", group=G, H=H)


@suite("pc:3(d)", "O^P(MN) = O^P(M) O^P(N) for normal M, N", is_group)
def _pc3d(inst, rng):
    G = inst.group
    normals = normal_subgroups(G)
    pairs = [(M, N) for i, M in enumerate(normals) for N in normals[i:] if M.join(N).order() == G.order()]
    pairs = _sample(pairs, rng)
    for P in _props(PC_PROPS):
        top = o_upper_p(G, P)
        for M, N in pairs:
            rhs = o_upper_p(M, P).join(o_upper_p(N, P))
            expect(top == rhs, f"{P.name}: O^P(G) = O^P(M)O^P(N)", group=G, M=M, N=N)


def _center_mod(K: PermGroup, O: PermGroup) -> PermGroup:
    """Preimage of Z(K/O) in K."""
    if O.is_trivial():
        return K.center()
    Q, phi = K.quotient(O)
    return phi.preimage(Q.center(), kernel=O)


@suite("pc:4(c)", "P-components are perfect with a unique maximal normal subgroup", is_group)
def _pc4c(inst, rng):
    G = inst.group
    for P in _props(PC_PROPS):
        for K in comp_p(G, P).members:
            expect(K.is_perfect(), f"{P.name}: P-component is perfect", group=G, K=K)
            Z = _center_mod(K, o_p(K, P))
            expect(Z.order() < K.order(), f"{P.name}: Z(K mod O_P(K)) is proper", group=G, K=K)
            for N in normal_subgroups(K):
                if N.order() < K.order():
                    expect(N.is_subgroup_of(Z), f"{P.name}: proper normal subgroups lie in Z(K mod O_P(K))", group=G, K=K, N=N)


@suite("pc:4(d)", "a P-component lies in a subnormal N or commutes with it modulo O_P(K)", is_group)
def _pc4d(inst, rng):
    G = inst.group
    subs = _sample(subnormal_subgroups(G), rng)
    for P in _props(PC_PROPS):
        for K in comp_p(G, P).members:
            OK = o_p(K, P)
            for N in subs:
                expect(
                    K.is_subgroup_of(N) or _commutes_into(G, K, N, OK),
                    f"{P.name}: K <= N or [K,N] <= O_P(K)",
                    group=G,
                    K=K,
                    N=N,
                )


@suite("pc:4(f)", "distinct P-components commute modulo their O_P", is_group)
def _pc4f(inst, rng):
    G = inst.group
    for P in _props(PC_PROPS):
        ms = comp_p(G, P).members
        for i, K in enumerate(ms):
            for L in ms[i + 1:]:
                target = o_p(K, P).intersection(o_p(L, P))
                expect(_commutes_into(G, K, L, target), f"{P.name}: [K,L] <= O_P(K) meet O_P(L)", group=G, K=K, L=L)


@suite("pc:4(i)", "[K, O_P(G) Sol(G)] lies in O_P(K)", is_group)
def _pc4i(inst, rng):
    G = inst.group
    R = solvable_radical(G)
    for P in _props(PC_PROPS):
        X = o_p(G, P).join(R)
        for K in comp_p(G, P).members:
            expect(_commutes_into(G, K, X, o_p(K, P)), f"{P.name}: [K, O_P(G)Sol(G)] <= O_P(K)", group=G, K=K)


@suite("pc:4(j)", "K -> K O_P(G)/O_P(G) is injective, and bijective onto components when P-groups are solvable", is_group)
def _pc4j(inst, rng):
    G = inst.group
    for P in _props(PC_PROPS):
        O = o_p(G, P)
        ms = comp_p(G, P).members
        images = {K.join(O).key() for K in ms}
        expect(len(images) == len(ms), f"{P.name}: images of P-components are distinct", group=G)
        if P.solvable_only:
            n = len(components(G)) if O.is_trivial() else len(components(G.quotient(O)[0]))
            expect(n == len(ms), f"{P.name}: bijection onto components of G/O_P(G)", group=G, components=n, p_components=len(ms))


@suite("def:pc2", "a non-subnormal subgroup is rejected as a P-component", lambda inst: inst.id == "group:A6", planted=True)
def _def_pc2(inst, rng):
    G = inst.group
    H = G.stabilizer(0)
    rejected = not is_p_component(G, H, get_property("trivial"))
    expect(not rejected, "point stabilizer A5 of A6 is not subnormal and is rejected", group=G, H=H, rejected=rejected)


# -- (A,P)-components -------------------------------------------------------------------------


@suite("ap:3", "(A,P)-components are the joins of A-orbits on P-components", is_action)
def _ap3(inst, rng):
    act = inst.action
    G = act.group
    subs = [N for N in subnormal_subgroups(G) if is_invariant(N, act.actor_basis)]
    for P in _props(PC_PROPS):
        res = comp_ap(act, G, P)
        keys = [K.key() for K in res.members]
        expect(len(set(keys)) == len(keys), f"{P.name}: distinct orbits give distinct members", action=act.name)
        for K in res.members:
            expect(is_ap_component(act, G, K, P), f"{P.name}: orbit join is an (A,P)-component", action=act.name, K=K)
        oracle = {N.key() for N in subs if is_ap_component(act, G, N, P)}
        expect(oracle == set(keys), f"{P.name}: matches the subnormal-subgroup oracle", action=act.name)


@suite("ap:4(d)", "an (A,P)-component lies in an A-invariant subnormal N or commutes with it modulo O_P(K)", is_action)
def _ap4d(inst, rng):
    act = inst.action
    G = act.group
    subs = _sample([N for N in subnormal_subgroups(G) if is_invariant(N, act.actor_basis)], rng)
    for P in _props(PC_PROPS):
        for K in comp_ap(act, G, P).members:
            OK = o_p(K, P)
            for N in subs:
                expect(K.is_subgroup_of(N) or _commutes_into(G, K, N, OK), f"{P.name}: K <= N or [K,N] <= O_P(K)", action=act.name, K=K, N=N)


@suite("ap:4(f)", "distinct (A,P)-components commute modulo their O_P", is_action)
def _ap4f(inst, rng):
    act = inst.action
    G = act.group
    for P in _props(PC_PROPS):
        ms = comp_ap(act, G, P).members
        for i, K in enumerate(ms):
            for L in ms[i + 1:]:
                target = o_p(K, P).intersection(o_p(L, P))
                expect(_commutes_into(G, K, L, target), f"{P.name}: [K,L] <= O_P(K) meet O_P(L)", action=act.name, K=K, L=L)


@suite("ap:4(i)", "[K, O_P(G) Sol(G)] lies in O_P(K) for (A,P)-components", is_action)
def _ap4i(inst, rng):
    act = inst.action
    G = act.group
    R = solvable_radical(G)
    for P in _props(PC_PROPS):
        X = o_p(G, P).join(R)
        for K in comp_ap(act, G, P).members:
            expect(_commutes_into(G, K, X, o_p(K, P)), f"{P.name}: [K, O_P(G)Sol(G)] <= O_P(K)", action=act.name, K=K)


@suite("ap:4(k)", "an (A,P)-component is normal in its normal closure", is_action)
def _ap4k(inst, rng):
    act = inst.action
    G = act.group
    for P in _props(PC_PROPS):
        for K in comp_ap(act, G, P).members:
            expect(G.normal_closure(K).is_normal(K), f"{P.name}: K normal in <K^G>", action=act.name, K=K)


# -- preliminaries ---------------------------------------------------------------------------


@suite("prel:1", "invariant H meeting an A-component centrally centralizes it", is_coprime_action)
def _prel1(inst, rng):
    act = inst.action
    G = act.group
    comps = a_components(act).members
    if not comps:
        raise Skip("no A-components")
    for K in comps:
        Z = K.center()
        acting = list(act.actor_basis) + list(fixed_points(act, None, K).generators)
        for H in _sample(invariant_family(act, acting), rng):
            if H.intersection(K).is_subgroup_of(Z):
                expect(G.commutator(H, K).is_trivial(), "[H,K] = 1", action=act.name, K=K, H=H)


def _fixed_mod_center(act: CoprimeAction, K: PermGroup) -> PermGroup:
    return quotient_fixed(act, K, K.center())


@suite("prel:2", "P <= N_G(K) or C_{K/Z(K)}(A) is a P-group", is_coprime_action)
def _prel2(inst, rng):
    act = inst.action
    G = act.group
    comps = a_components(act).members
    if not comps:
        raise Skip("no A-components")
    family = _sample(invariant_family(act, act.actor_basis), rng)
    for K in comps:
        CK = fixed_points(act, None, K)
        NK = G.normalizer(K)
        fixed = _fixed_mod_center(act, K)
        for P in _props(PC_PROPS):
            for X in family:
                if not (CK.is_subgroup_of(G.normalizer(X)) and P.predicate(G.commutator(X, CK))):
                    continue
                expect(
                    X.is_subgroup_of(NK) or P.predicate(fixed),
                    f"{P.name}: X <= N_G(K) or C_(K/Z(K))(A) is a P-group",
                    action=act.name,
                    K=K,
                    X=X,
                )


# -- invariant P-closures ------------------------------------------------------------------------


@suite("p:2", "the invariant P-closure is a P-group and the unique maximal invariant P-subgroup", is_coprime_action)
def _p2(inst, rng):
    act = inst.action
    for P in _props(EXT_PROPS):
        fam = enumerate_invariant_subgroups(act, "ACGA", P)
        J = fam.join()
        expect(P.predicate(J), f"{P.name}: join of invariant P-subgroups is a P-group", action=act.name, join=J)
        expect(J == o_p_invariant(act, P), f"{P.name}: o_p_invariant equals the enumerated join", action=act.name)


@suite("p:3", "derived functors theta_P are signalizer functors", is_functor)
def _p3(inst, rng):
    f = inst.functor
    for P in _props(EXT_PROPS):
        d = derive_functor(f, "P", P)
        expect(d.report.passed, f"{P.name}: theta_P passes functor verification", functor=f.name, failures=d.report.failures)


def _acga_family(act: CoprimeAction, rng) -> list[PermGroup]:
    gens = list(act.actor_basis) + list(fixed_points(act).generators)
    return _sample(invariant_family(act, gens), rng)


@suite("p:4", "C_G(A) normalizes O_P(N;A); O_P(N;A) = O_P(G;A) meet N; closures of direct products", is_coprime_action)
def _p4(inst, rng):
    act = inst.action
    G = act.group
    CGA = fixed_points(act)
    family = _acga_family(act, rng)
    factors = [F for _, F in orbit_factors(G)]
    for P in _props(EXT_PROPS):
        OG = o_p_invariant(act, P)
        for N in family:
            ON = o_p_invariant(act, P, N)
            expect(CGA.normalizes(ON), f"{P.name}: C_G(A) normalizes O_P(N;A)", action=act.name, N=N)
            expect(ON == OG.intersection(N), f"{P.name}: O_P(N;A) = O_P(G;A) meet N", action=act.name, N=N)
            if G.is_normal(N):
                expect(OG.is_normal(ON), f"{P.name}: O_P(N;A) normal in O_P(G;A)", action=act.name, N=N)
        if len(factors) > 1 and all(is_invariant(F, act.actor_basis) for F in factors):
            prod = join_all(G, [o_p_invariant(act, P, F) for F in factors])
            expect(prod == OG, f"{P.name}: closure of a direct product is the product of closures", action=act.name)


def _simple_factor_decompositions(act: CoprimeAction) -> list[tuple[PermGroup, list[PermGroup]]]:
    """A-invariant normal N with N the direct product of its simple orbit factors."""
    out = []
    for N in a_invariant_normal(act):
        if N.is_trivial():
            continue
        facs = [F for _, F in orbit_factors(N)]
        if all(is_simple(F) for F in facs) and math.prod(F.order() for F in facs) == N.order():
            out.append((N, facs))
    return out


def _projection(F_points: list[int], g) -> tuple:
    img = list(range(len(g)))
    for p in F_points:
        img[p] = g[p]
    return tuple(img)


@suite("p:5", "fixed points project onto factor fixed points; O_P(N;A) = O_P(N;B)", is_coprime_action)
def _p5(inst, rng):
    act = inst.action
    G = act.group
    decs = _simple_factor_decompositions(act)
    subs = [act.subgroup_of_vectors([v]) for v in act.cyclic_vectors]
    if act.rank > 1:
        subs.append(act.actors)
        subs.extend(act.subgroup_of_vectors(b) for _, b in act.hyperplanes())
    ran = False
    for N, facs in decs:
        CNA = fixed_points(act, None, N)
        for B in subs:
            if not all(is_invariant(F, B.generators) and not F.centralizer(B).order() == F.order() for F in facs):
                continue
            ran = True
            bact = CoprimeAction.build(G, list(B.generators), act.prime, require_coprime=False)
            for F in facs:
                pts = sorted(F.moved_points())
                proj = PermGroup(G.degree, [_projection(pts, c) for c in CNA.generators])
                expect(proj == F.centralizer(B), "C_N(A) projects onto C_{N_i}(B)", action=act.name, N=N, factor=F, B=B)
            for P in _props(EXT_PROPS):
                expect(
                    o_p_invariant(act, P, N) == o_p_invariant(bact, P, N),
                    f"{P.name}: O_P(N;A) = O_P(N;B)",
                    action=act.name,
                    N=N,
                    B=B,
                )
    if not ran:
        raise Skip("no normal product of simple factors with a suitable B")


@suite("p:6", "invariant P-subgroups normalize O_P(N;A) for N a product of nonabelian simple groups", is_coprime_action)
def _p6(inst, rng):
    act = inst.action
    decs = [(N, f) for N, f in _simple_factor_decompositions(act) if not N.is_abelian()]
    if not decs:
        raise Skip("no normal product of nonabelian simple groups")
    for N, _ in decs:
        acting = list(act.actor_basis) + list(fixed_points(act, None, N).generators)
        family = _sample(invariant_family(act, acting), rng)
        for P in _props(EXT_PROPS):
            ON = o_p_invariant(act, P, N)
            for X in family:
                if P.predicate(X):
                    expect(X.normalizes(ON), f"{P.name}: X normalizes O_P(N;A)", action=act.name, N=N, X=X)


# -- near (A,P)-groups --------------------------------------------------------------------------


@suite("nap:3", "O_nP(G) is near; extensions of near groups are near", is_coprime_action)
def _nap3(inst, rng):
    act = inst.action
    G = act.group
    for P in _props(NEAR_PROPS):
        O = o_np_normal(act, P)
        expect(is_near_ap(act, O, P), f"{P.name}: O_nP(G) is a near (A,P)-group", action=act.name)
        for N in a_invariant_normal(act):
            if N.is_trivial() or N.order() == G.order():
                continue
            if is_near_ap(act, N, P) and P.predicate(quotient_fixed(act, G, N)):
                expect(is_near_ap(act, G, P), f"{P.name}: N and G/N near implies G near", action=act.name, N=N)


@suite("nap:4", "O_nP(G;A) is near, restricts to normal subgroups and is normalized by O_{P,E}(H)", is_coprime_action)
def _nap4(inst, rng):
    act = inst.action
    family = _acga_family(act, rng)
    for P in _props(NEAR_PROPS):
        O = o_np_invariant(act, P)
        expect(is_near_ap(act, O, P), f"{P.name}: O_nP(G;A) is a near (A,P)-group", action=act.name)
        for N in a_invariant_normal(act):
            expect(o_np_invariant(act, P, N) == O.intersection(N), f"{P.name}: O_nP(N;A) = O_nP(G;A) meet N", action=act.name, N=N)
        for H in family:
            expect(o_pe(H, P).normalizes(O), f"{P.name}: O_PE(H) normalizes O_nP(G;A)", action=act.name, H=H)


@suite("nap:5", "an A-simple group with a nontrivial invariant near subgroup is near", is_coprime_action)
def _nap5(inst, rng):
    act = inst.action
    if not hyp_a_simple(act):
        raise Skip("G is not A-simple")
    for P in _props(NEAR_PROPS):
        O = o_np_invariant(act, P)
        if not O.is_trivial():
            expect(is_near_ap(act, act.group, P), f"{P.name}: G is a near (A,P)-group", action=act.name, X=O)


@suite("nap:6", "[X,L] = 1 or L is near, for L an A-component with trivial center", is_coprime_action)
def _nap6(inst, rng):
    act = inst.action
    G = act.group
    comps = [L for L in a_components(act).members if L.center().is_trivial()]
    if not comps:
        raise Skip("no centerless A-components")
    family = _acga_family(act, rng)
    for P in _props(NEAR_PROPS):
        for X in family:
            if not is_near_ap(act, X, P):
                continue
            for L in comps:
                expect(
                    G.commutator(X, L).is_trivial() or is_near_ap(act, L, P),
                    f"{P.name}: [X,L] = 1 or L near",
                    action=act.name,
                    X=X,
                    L=L,
                )


# -- local to global -----------------------------------------------------------------------------


def _acga_vec_family(act: CoprimeAction, vec, rng) -> list[PermGroup]:
    from .closures import fixed_points_of

    gens = list(act.actor_basis) + list(fixed_points(act).generators) + list(fixed_points_of(act, vec).generators)
    return _sample(invariant_family(act, gens), rng, 12)


@suite("lglob:5", "components of invariant subgroups embed in (A,sol)-components", is_coprime_action)
def _lglob5(inst, rng):
    act = inst.action
    G = act.group
    sol = get_property("solvable")
    comp_sol = comp_p(G, sol).members
    ran = False
    for vec in act.cyclic_vectors:
        a = act.element(vec)
        for H in _acga_vec_family(act, vec, rng):
            for P in _props(PC_PROPS):
                if P.solvable_only:
                    for K in comp_ap(act, H, P).members:
                        if G.commutator(K, PermGroup(G.degree, [a])) == K:
                            ran = True
                            expect(is_ap_component(act, G, K, P), f"{P.name}: K = [K,a] is an (A,P)-component of G", action=act.name, H=H, K=K)
                if hyp_lglob3(P) and H.normalizes(G) and is_invariant(H, fixed_points(act).generators):
                    ran = True
                    X = o_p(H, P).join(comp_p(H, P).layer)
                    expect(acts_trivially_on(list(X.generators), comp_sol), f"{P.name}: O_P(H)L_P(H) fixes Comp_sol(G)", action=act.name, H=H)
                    for K in comp_ap(act, H, P).members:
                        expect(embed_in_asol(act, H, K, P) is not None, f"{P.name}: K lies in an (A,sol)-component", action=act.name, H=H, K=K)
    if not ran:
        raise Skip("no instance of the hypotheses")


@suite("lglob:6", "a unique A-component contains K when K lies in E(G) or fixes the components", is_coprime_action)
def _lglob6(inst, rng):
    act = inst.action
    G = act.group
    E = layer(G)
    comps_G = components(G)
    triv = a_components(act).members
    solfree = solvable_radical(G).is_trivial()
    ran = False
    for H in _acga_family(act, rng):
        for P in _props(PC_PROPS):
            for K in comp_ap(act, H, P).members:
                hyp = K.is_subgroup_of(E) or (solfree and acts_trivially_on(list(K.generators), comps_G))
                if not hyp:
                    continue
                ran = True
                hits = [L for L in triv if K.is_subgroup_of(L)]
                expect(len(hits) == 1, f"{P.name}: exactly one A-component of G contains K", action=act.name, H=H, K=K, count=len(hits))
    for i, K in enumerate(triv):
        for L in triv[i + 1:]:
            expect(K.intersection(L).is_solvable(), "distinct A-components meet solvably", action=act.name, K=K, L=L)
    if not ran and len(triv) < 2:
        raise Skip("no instance of the hypotheses")


@suite("lglob:7", "O_P(H)L_P(H) normalizes L and its components, or C_{L/Z(L)}(A) is a P-group", is_coprime_action)
def _lglob7(inst, rng):
    act = inst.action
    comps = a_components(act).members
    if not comps:
        raise Skip("no A-components")
    family = _acga_family(act, rng)
    for L in comps:
        parts = components(L)
        fixed = _fixed_mod_center(act, L)
        for P in _props(PC_PROPS):
            for H in family:
                X = o_p(H, P).join(comp_p(H, P).layer)
                ok = X.normalizes(L) and all(X.normalizes(C) for C in parts)
                expect(ok or P.predicate(fixed), f"{P.name}: alternative holds", action=act.name, L=L, H=H)


@suite("lglob:8", "A-components and (A,nil)-components of invariant subgroups embed upward", is_coprime_action)
def _lglob8(inst, rng):
    act = inst.action
    G = act.group
    nil = get_property("nilpotent")
    sol = get_property("solvable")
    up_nil = comp_ap(act, G, nil).members
    up_sol = comp_ap(act, G, sol).members
    ran = False
    for vec in act.cyclic_vectors:
        for H in _acga_vec_family(act, vec, rng):
            for K in a_components(act, H).members:
                ran = True
                expect(any(K.is_subgroup_of(M) for M in up_nil), "A-component lies in an (A,nil)-component of G", action=act.name, H=H, K=K)
            for K in comp_ap(act, H, nil).members:
                ran = True
                expect(any(K.is_subgroup_of(M) for M in up_sol), "(A,nil)-component lies in an (A,sol)-component of G", action=act.name, H=H, K=K)
    if not ran:
        raise Skip("no components in invariant subgroups")


# -- O_{P,E} --------------------------------------------------------------------------------------


@suite("md:2", "O_{P,E} is unchanged on passing to subgroups containing it", is_group)
def _md2(inst, rng):
    G = inst.group
    for P in _props(NEAR_PROPS):
        E = o_pe(G, P)
        hs = [E.join(PermGroup(G.degree, [G.random_element(rng)])) for _ in range(4)] + [E, G]
        for H in hs:
            expect(o_pe(H, P) == E, f"{P.name}: O_PE(H) = O_PE(G) when O_PE(G) <= H", group=G, H=H)
        samples = random_subgroups(G, rng, 4)
        for H in samples:
            EH = o_pe(H, P)
            M = EH.join(PermGroup(G.degree, [G.random_element(rng)]))
            if o_pe(M, P).is_subgroup_of(H):
                expect(o_pe(M, P) == EH, f"{P.name}: O_PE(H) = O_PE(M)", group=G, H=H, M=M)


@suite("md:3", "O_{P,E}(G) is recovered from hyperplane and element centralizers", is_coprime_action)
def _md3(inst, rng):
    from .closures import fixed_points_of

    act = inst.action
    G = act.group
    if not hyp_noncyclic(act):
        raise Skip("A is cyclic")
    for P in _props(NEAR_PROPS):
        E = o_pe(G, P)
        H1 = join_all(G, [o_pe(fixed_points(act, act.subgroup_of_vectors(b)), P) for _, b in act.hyperplanes()])
        H2 = join_all(G, [o_pe(fixed_points_of(act, v), P) for v in act.cyclic_vectors])
        expect(o_pe(H1, P) == E, f"{P.name}: hyperplane form", action=act.name)
        expect(o_pe(H2, P) == E, f"{P.name}: element form", action=act.name)


# -- signalizer functors ------------------------------------------------------------------------


def _rank2(inst) -> bool:
    return is_functor(inst) and inst.action.rank >= 2


@suite("md:5", "the closure is generated by the hyperplane values", _rank2)
def _md5(inst, rng):
    f = inst.functor
    if not functor_verify(f).passed:
        raise Skip("not a signalizer functor")
    rep = completeness(f)
    expect(rep.hyperplane_closure_match is True, "<theta(a)> = <theta(B)>", functor=f.name)


def _hyperplane_values(f: SignalizerFunctor) -> list[PermGroup]:
    return [functor_restrict_hyperplane(f, fn) for fn, _ in f.action.hyperplanes()]


@suite("md:6", "the O_{P,E} closure of the values is normal in the closure when it lies in a theta-subgroup", _rank2)
def _md6(inst, rng):
    f = inst.functor
    if not functor_verify(f).passed:
        raise Skip("not a signalizer functor")
    G = f.action.group
    W = closure(f)
    hvals = _hyperplane_values(f)
    ran = False
    for P in _props(NEAR_PROPS):
        H1 = join_all(G, [o_pe(X, P) for X in f.values().values()])
        H2 = join_all(G, [o_pe(X, P) for X in hvals])
        for H in (H1, H2):
            if not (is_theta_subgroup(f, H) or (H.is_subgroup_of(W) and is_theta_subgroup(f, W))):
                continue
            ran = True
            expect(is_theta_subgroup(f, H), f"{P.name}: H_i is a theta-subgroup", functor=f.name, H=H)
            expect(W.is_normal(o_pe(H1, P)), f"{P.name}: O_PE(H_1) normal in the closure", functor=f.name)
    if not ran:
        raise Skip("H_i lies in no theta-subgroup")


@suite("md:7", "O_{P,E}(theta(B)) normalizes the closure of theta_nP when theta_nP is complete", _rank2)
def _md7(inst, rng):
    f = inst.functor
    if not functor_verify(f).passed:
        raise Skip("not a signalizer functor")
    hvals = _hyperplane_values(f)
    ran = False
    for P in _props(NEAR_PROPS):
        d = derive_functor(f, "nP", P).functor
        rep = completeness(d)
        if not rep.complete:
            continue
        ran = True
        for X in hvals:
            expect(o_pe(X, P).normalizes(rep.closure), f"{P.name}: O_PE(theta(B)) normalizes theta_nP(G)", functor=f.name, B=X)
    if not ran:
        raise Skip("theta_nP not complete")


@suite("nap:4-functor", "derived functors theta_nP are signalizer functors", is_functor)
def _nap4_functor(inst, rng):
    f = inst.functor
    for P in _props(NEAR_PROPS):
        d = derive_functor(f, "nP", P)
        expect(d.report.passed, f"{P.name}: theta_nP passes functor verification", functor=f.name, failures=d.report.failures)


def _rank3(inst) -> bool:
    return is_functor(inst) and inst.action.rank >= 3


@suite("gor:2", "functors with A trivial on every Comp_sol(theta(a)) are complete", _rank3)
def _gor2(inst, rng):
    f = inst.functor
    rep = gorenstein_lyons_check(f)
    if not rep.hypothesis:
        raise Skip("A moves a sol-component of some value")
    expect(rep.complete, "theta is complete", functor=f.name, report=rep.to_json())


@suite("gor:4", "psi is a theta(A)-invariant subfunctor; psi complete implies theta complete", is_functor)
def _gor4(inst, rng):
    f = inst.functor
    if not functor_verify(f).passed:
        raise Skip("not a signalizer functor")
    theta_A = f.theta_A()
    f_complete = None
    for t in f.action.cyclic_vectors:
        psi = subfunctor_psi(f, t)
        rep = verify_subfunctor(psi, f)
        expect(rep.passed, "psi is a subfunctor", functor=f.name, t=list(t), failures=rep.failures)
        expect(all(theta_A.normalizes(v) for v in psi.values().values()), "theta(A) normalizes psi", functor=f.name, t=list(t))
        if completeness(psi).complete:
            if f_complete is None:
                f_complete = completeness(f).complete
            expect(f_complete, "psi complete implies theta complete", functor=f.name, t=list(t))


@suite("gor:6", "t trivial on Comp_sol(H) stays trivial on Comp_sol(M) for invariant M", is_action)
def _gor6(inst, rng):
    act = inst.action
    G = act.group
    sol = get_property("solvable")
    ts = [v for v in act.cyclic_vectors if hyp_t_trivial_on_compsol(act, act.element(v), G)]
    if not ts:
        raise Skip("no t acting trivially on Comp_sol(G)")
    family = _acga_family(act, rng)
    for v in ts:
        t = act.element(v)
        for M in family:
            expect(acts_trivially_on([t], comp_p(M, sol).members), "t fixes Comp_sol(M)", action=act.name, t=list(v), M=M)


@suite("gor:7", "simple sections of C_[H,t](t) are smaller than some L/Sol(L)", is_coprime_action)
def _gor7(inst, rng):
    act = inst.action
    G = act.group
    sol = get_property("solvable")
    comps = comp_p(G, sol).members
    ts = [v for v in act.cyclic_vectors if hyp_t_trivial_on_compsol(act, act.element(v), G)]
    if not ts:
        raise Skip("no t acting trivially on Comp_sol(G)")
    tops = [L.order() // solvable_radical(L).order() for L in comps]
    for v in ts:
        t = PermGroup(G.degree, [act.element(v)])
        C = act.wrapper.commutator(G, t).centralizer(t)
        for lab in composition_factors(C):
            n = label_order(lab)
            if n is None or lab.startswith("C"):
                continue
            expect(any(n < m for m in tops), "|S| < |L/Sol(L)| for some L", action=act.name, t=list(v), section=lab)


# -- negative controls ----------------------------------------------------------------------------


@suite("axioms:abelian", "abelian groups are not closed under normal products", lambda inst: inst.id == "group:D8", planted=True)
def _axioms_abelian(inst, rng):
    rep = verify_axioms(get_property("abelian"), [inst.group])
    expect(rep.passed, "declared axioms hold", report=rep.to_json())


@suite("functor:broken", "a functor assigning C_G(e1) to e1 and 1 elsewhere violates balance",
       lambda inst: inst.id == "action:C2^3 on C3^3", planted=True)
def _functor_broken(inst, rng):
    rep = functor_verify(broken_functor(inst.action))
    expect(rep.passed, "balance holds", report=rep.to_json())


# -- runner ---------------------------------------------------------------------------------------


def suite_ids() -> list[str]:
    return sorted(SUITES)


def _rng(seed: int, sid: str, inst_id: str) -> random.Random:
    return random.Random(f"{seed}|{sid}|{inst_id}")


def _run_one(s: Suite, inst: Instance, seed: int) -> tuple[str, object]:
    rng = _rng(seed, s.id, inst.id)
    try:
        s.check(inst, rng)
    except Skip as e:
        return "skip", str(e)
    except ResourceLimitError:
        return "skip", "resource limit"
    except Violation as v:
        kind = "planted" if s.planted else "theorem-violation"
        return "finding", Finding(inst.id, v.claim, kind, {"instance": inst.describe(), **v.witness})
    except TheoremViolation as v:
        return "finding", Finding(inst.id, v.claim, "theorem-violation", {"instance": inst.describe(), **_jsonable(v.witness)})
    return "pass", None


def _worker(args) -> tuple[str, object]:
    sid, tier, seed, idx = args
    inst = generate_corpus(tier)[idx]
    return _run_one(SUITES[sid], inst, seed)


def run_suite(suite_id: str, tier: str = "small", seed: int = 0, workers: int = 1) -> SuiteResult:
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}")
    s = SUITES[suite_id]
    start = time.perf_counter()
    corpus = generate_corpus(tier)
    idxs = [i for i, inst in enumerate(corpus) if s.applies(inst)]
    if workers > 1 and len(idxs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            outcomes = list(ex.map(_worker, [(suite_id, tier, seed, i) for i in idxs]))
    else:
        outcomes = [_run_one(s, corpus[i], seed) for i in idxs]
    res = SuiteResult(suite_id, tier, seed)
    for status, data in outcomes:
        res.instances_run += 1
        if status == "pass":
            res.passed += 1
        elif status == "skip":
            res.skipped += 1
            res.skip_reasons[data] = res.skip_reasons.get(data, 0) + 1
        else:
            res.findings.append(data)
    res.wall_time = time.perf_counter() - start
    return res
