"""Group-theoretic properties, closure-axiom verification and the closure
operators O_P, O^P and O_{P,E}."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from sympy import factorint, primefactors

from .errors import PreconditionError, ResourceLimitError
from .group import PermGroup, orbit_factors
from .perm import format_cycles, order as perm_order, power

AXIOMS = (
    "subgroup_closed",
    "quotient_closed",
    "intersection_quotient",
    "normal_product",
    "extension_closed",
    "contains_solvable",
)
# the closure hypotheses required by O_P, O^P and the P-component machinery
BASIC_AXIOMS = ("subgroup_closed", "quotient_closed", "intersection_quotient", "normal_product")
EXTENSION_AXIOMS = ("subgroup_closed", "quotient_closed", "extension_closed")
SOLVABLE_EXTENSION_AXIOMS = EXTENSION_AXIOMS + ("contains_solvable",)


@dataclass(frozen=True, eq=False)
class Property:
    """A named predicate with declared closure axioms.

    ``section(H, N)`` decides P(H/N) for N normal in H without building the
    quotient; ``solvable_only`` records that every P-group is solvable.
    """

    name: str
    predicate: Callable[[PermGroup], bool]
    axioms: frozenset
    section: Callable[[PermGroup, PermGroup], bool] | None = None
    solvable_only: bool = True
    primes: frozenset | None = None
    kind: str = ""
    labels: frozenset = field(default_factory=frozenset)

    def __call__(self, G: PermGroup) -> bool:
        return self.predicate(G)

    def holds(self, G: PermGroup) -> bool:
        return self.predicate(G)

    def holds_section(self, H: PermGroup, N: PermGroup) -> bool:
        if self.section is not None:
            return self.section(H, N)
        Q, _ = H.quotient(N)
        return self.predicate(Q)

    def declares(self, *axioms: str) -> bool:
        return all(a in self.axioms for a in axioms)

    def __repr__(self) -> str:
        return f"Property({self.name})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Property) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)


# -- built-in predicates ------------------------------------------------------------


def _index(H: PermGroup, N: PermGroup) -> int:
    return H.order() // N.order()


def _is_pi_number(n: int, primes: frozenset) -> bool:
    return all(p in primes for p in primefactors(n))


def _trivial() -> Property:
    return Property(
        "trivial",
        lambda G: G.is_trivial(),
        frozenset(AXIOMS) - {"contains_solvable"},
        section=lambda H, N: H.order() == N.order(),
        kind="trivial",
    )


def _nilpotent() -> Property:
    def section(H, N):
        return H.lower_central_series()[-1].is_subgroup_of(N)

    return Property(
        "nilpotent",
        lambda G: G.is_nilpotent(),
        frozenset(BASIC_AXIOMS),
        section=section,
        kind="nilpotent",
    )


def _solvable() -> Property:
    return Property(
        "solvable",
        lambda G: G.is_solvable(),
        frozenset(AXIOMS),
        section=lambda H, N: H.perfect_core().is_subgroup_of(N),
        kind="solvable",
    )


def _abelian() -> Property:
    # declares normal products although abelian groups are not closed under
    # them; kept as a negative control for verify_axioms
    return Property(
        "abelian",
        lambda G: G.is_abelian(),
        frozenset(BASIC_AXIOMS),
        section=lambda H, N: H.derived_subgroup().is_subgroup_of(N),
        kind="abelian",
    )


def _pi(primes: Iterable[int], name: str | None = None) -> Property:
    ps = frozenset(int(p) for p in primes)
    for p in ps:
        if len(factorint(p)) != 1 or sum(factorint(p).values()) != 1:
            raise PreconditionError(f"{p} is not a prime")
    # pi-groups with 2 not in pi are solvable (odd order); Burnside covers |pi| <= 2
    solvable_only = 2 not in ps or len(ps) <= 2
    return Property(
        name or "pi:" + ",".join(str(p) for p in sorted(ps)),
        lambda G: _is_pi_number(G.order(), ps),
        frozenset(AXIOMS) - {"contains_solvable"},
        section=lambda H, N: _is_pi_number(_index(H, N), ps),
        solvable_only=solvable_only,
        primes=ps,
        kind="pi",
    )


class _OddPrimes(frozenset):
    """Stand-in prime set: every odd prime."""

    def __contains__(self, p) -> bool:
        return p != 2


def _odd() -> Property:
    odd = _OddPrimes()
    return Property(
        "odd-order",
        lambda G: G.order() % 2 == 1,
        frozenset(AXIOMS) - {"contains_solvable"},
        section=lambda H, N: _index(H, N) % 2 == 1,
        solvable_only=True,
        primes=odd,
        kind="pi",
    )


# nonabelian simple sections of the groups allowed in cf-properties
SIMPLE_SECTIONS = {
    "A5": set(),
    "L2(7)": set(),
    "L2(8)": set(),
    "L2(13)": set(),
    "L2(17)": set(),
    "L2(32)": set(),
    "L2(128)": set(),
    "A6": {"A5"},
    "L2(11)": {"A5"},
    "L2(16)": {"A5"},
    "L2(19)": {"A5"},
    "A7": {"A5", "A6", "L2(7)"},
}


def _cf(labels: Iterable[str]) -> Property:
    """Every nonabelian composition factor has one of the given labels."""
    from .structure import section_composition_factors

    ls = frozenset(labels)
    for lab in ls:
        if lab not in SIMPLE_SECTIONS:
            raise PreconditionError(f"cf-properties support only {sorted(SIMPLE_SECTIONS)}; got {lab!r}")
        if not SIMPLE_SECTIONS[lab] <= ls:
            raise PreconditionError(f"{lab} has simple sections {sorted(SIMPLE_SECTIONS[lab])} missing from the set")

    def ok(cf: list[str]) -> bool:
        return all(c.startswith("C") or c in ls for c in cf)

    def pred(G: PermGroup) -> bool:
        if G.is_solvable():
            return True
        return ok(section_composition_factors(G, PermGroup(G.degree))[0])

    def section(H: PermGroup, N: PermGroup) -> bool:
        if H.perfect_core().is_subgroup_of(N):
            return True
        return ok(section_composition_factors(H, N)[0])

    return Property(
        "cf:" + ",".join(sorted(ls)),
        pred,
        frozenset(AXIOMS),
        section=section,
        solvable_only=not ls,
        kind="cf",
        labels=ls,
    )


_REGISTRY: dict[str, Property] = {}


def register(P: Property) -> Property:
    if P.name in _REGISTRY:
        raise PreconditionError(f"property {P.name!r} is already registered")
    _REGISTRY[P.name] = P
    return P


for _p in (_trivial(), _nilpotent(), _solvable(), _abelian(), _odd()):
    register(_p)


def get_property(name: str) -> Property:
    """Look up a property; ``pi:2,3`` / ``p:5`` / ``cf:A5`` are built on demand."""
    name = name.strip()
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name in ("nil", "sol", "triv", "odd"):
        return get_property({"nil": "nilpotent", "sol": "solvable", "triv": "trivial", "odd": "odd-order"}[name])
    if name.startswith("pi:") or name.startswith("p:"):
        primes = sorted({int(t) for t in name.split(":", 1)[1].replace(" ", "").split(",") if t})
        P = _pi(primes)
    elif name.startswith("cf:"):
        P = _cf(t for t in name[3:].split(",") if t)
    else:
        raise PreconditionError(f"unknown property {name!r}")
    return _REGISTRY.get(P.name) or register(P)


def p_group_property(p: int) -> Property:
    return get_property(f"pi:{p}")


def registered() -> list[str]:
    return sorted(_REGISTRY)


# -- axiom verification --------------------------------------------------------------


@dataclass
class AxiomResult:
    axiom: str
    status: str  # "pass" | "fail" | "untested"
    checks: int = 0
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "status": self.status, "checks": self.checks}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class AxiomReport:
    property: str
    results: dict[str, AxiomResult]

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results.values())

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results.values() if r.status == "fail"]

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "passed": self.passed,
            "results": [self.results[a].to_json() for a in AXIOMS if a in self.results],
        }


def _gens(H: PermGroup) -> list[str]:
    return [format_cycles(g) for g in H.generators]


def verify_axioms(P: Property, corpus: Sequence[PermGroup]) -> AxiomReport:
    """Test every declared axiom on the given groups, their subgroups and
    their normal subgroups.  Quotients are built explicitly, so the check
    does not rely on P's own section shortcut."""
    from .enumerated import Enumerated

    if not corpus:
        raise PreconditionError("verify_axioms needs a nonempty corpus")
    results = {a: AxiomResult(a, "untested") for a in AXIOMS if a in P.axioms}

    def record(axiom: str, ok: bool, witness: dict) -> None:
        r = results.get(axiom)
        if r is None or r.status == "fail":
            return
        r.checks += 1
        if ok:
            r.status = "pass"
        else:
            r.status = "fail"
            r.witness = witness

    for G in corpus:
        enum = Enumerated(G)
        normals = [enum.group_of(m) for m in enum.normal_subgroups()]
        quot = {}

        def PQ(N: PermGroup) -> bool:
            k = N.key()
            if k not in quot:
                Q, _ = G.quotient(N)
                quot[k] = P.predicate(Q)
            return quot[k]

        PG = P.predicate(G)
        gdesc = {"group": _gens(G), "degree": G.degree, "order": G.order()}
        if "subgroup_closed" in results and PG:
            for m in enum.all_subgroups():
                H = enum.group_of(m)
                if not P.predicate(H):
                    record("subgroup_closed", False, {**gdesc, "subgroup": _gens(H)})
                    break
            else:
                record("subgroup_closed", True, {})
        if "quotient_closed" in results and PG:
            bad = next((N for N in normals if not PQ(N)), None)
            record("quotient_closed", bad is None, {**gdesc, "normal": _gens(bad) if bad else []})
        if "intersection_quotient" in results:
            good = [N for N in normals if PQ(N)]
            for i, M in enumerate(good):
                for N in good[i:]:
                    I = M.intersection(N)
                    record(
                        "intersection_quotient",
                        PQ(I),
                        {**gdesc, "M": _gens(M), "N": _gens(N)},
                    )
        if "normal_product" in results:
            good = [N for N in normals if P.predicate(N)]
            for i, M in enumerate(good):
                for N in good[i:]:
                    MN = M.join(N)
                    record("normal_product", P.predicate(MN), {**gdesc, "M": _gens(M), "N": _gens(N)})
        if "extension_closed" in results:
            for N in normals:
                if P.predicate(N) and PQ(N):
                    record("extension_closed", PG, {**gdesc, "normal": _gens(N)})
        if "contains_solvable" in results and G.is_solvable():
            record("contains_solvable", PG, gdesc)
    return AxiomReport(P.name, results)


_ADMITTED: dict[str, AxiomReport] = {}


def axiom_corpus() -> list[PermGroup]:
    """Seed groups used to admit properties: all small groups needed to
    exercise every axiom for the built-ins, including nonsolvable ones."""
    from .corpus import axiom_seed_groups

    return axiom_seed_groups()


def admit(P: Property, needed: Sequence[str] = BASIC_AXIOMS) -> AxiomReport:
    """Verify P's axioms on the seed corpus (once) and require ``needed``."""
    missing = [a for a in needed if a not in P.axioms]
    if missing:
        raise PreconditionError(f"{P.name} does not declare {', '.join(missing)}")
    rep = _ADMITTED.get(P.name)
    if rep is None:
        rep = verify_axioms(P, axiom_corpus())
        _ADMITTED[P.name] = rep
    failed = [a for a in needed if rep.results[a].status == "fail"]
    if failed:
        raise PreconditionError(f"{P.name} fails the axioms {', '.join(failed)} on the seed corpus")
    return rep


# -- closure operators ----------------------------------------------------------------


def o_p(G: PermGroup, P: Property) -> PermGroup:
    """The largest normal P-subgroup of G."""
    from .structure import fitting, normal_p_subgroup, solvable_radical

    admit(P)
    cache = G._cache.setdefault("o_p", {})
    if P.name in cache:
        return cache[P.name]
    if P.kind == "trivial":
        res = PermGroup(G.degree)
    elif P.predicate(G):
        res = G
    elif P.kind == "nilpotent":
        res = fitting(G)
    elif P.kind == "solvable":
        res = solvable_radical(G)
    else:
        res = normal_p_subgroup(G, P.predicate)
    cache[P.name] = res
    return res


def o_upper_p(G: PermGroup, P: Property) -> PermGroup:
    """The smallest normal subgroup of G with P-quotient."""
    admit(P)
    cache = G._cache.setdefault("o_upper_p", {})
    if P.name in cache:
        return cache[P.name]
    if P.kind == "trivial":
        res = G
    elif P.predicate(G):
        res = PermGroup(G.degree)
    elif P.kind == "nilpotent":
        res = G.lower_central_series()[-1]
    elif P.kind == "solvable":
        res = G.perfect_core()
    elif P.kind == "abelian":
        res = G.derived_subgroup()
    elif P.kind == "pi":
        res = _o_upper_pi(G, P.primes)
    else:
        res = _o_upper_generic(G, P)
    cache[P.name] = res
    return res


def _pi_prime_part(x, primes) -> tuple[int, ...] | None:
    """The pi'-part of x (as a power of x), or None if trivial."""
    o = perm_order(x)
    m = 1
    for p, e in factorint(o).items():
        if p not in primes:
            m *= p**e
    if m == 1:
        return None
    return power(x, o // m)


def _o_upper_pi(G: PermGroup, primes) -> PermGroup:
    # G/N is a pi-group iff N contains every pi'-element
    from .structure import class_data, enumerable

    if enumerable(G):
        parts = [y for x in class_data(G).reps if (y := _pi_prime_part(x, primes)) is not None]
        return G.normal_closure(parts) if parts else PermGroup(G.degree)
    facs = orbit_factors(G)
    if len(facs) > 1:
        gens = [g for _, K in facs for g in _o_upper_pi(K, primes).generators]
        return PermGroup(G.degree, gens)
    # N = normal closure of pi'-parts of seeded random elements; N <= O^pi(G)
    # always, and equality holds once |G : N| is a pi-number
    rng = random.Random(0)
    N = PermGroup(G.degree)
    for _ in range(5000):
        if _is_pi_number(G.order() // N.order(), primes):
            return N
        y = _pi_prime_part(G.random_element(rng), primes)
        if y is not None and not N.contains(y):
            N = G.normal_closure(list(N.generators) + [y])
    raise ResourceLimitError("could not generate the pi'-residual")


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """All normal subgroups of an enumerable group (joins of class normal closures)."""
    from .structure import class_data, enumerable

    if not enumerable(G):
        raise ResourceLimitError("normal subgroup enumeration needs an enumerable group")
    cd = class_data(G)
    atoms = {}
    for i in range(len(cd)):
        N = cd.ncl(i)
        atoms.setdefault(N.key(), N)
    found = {PermGroup(G.degree).key(): PermGroup(G.degree)}
    queue = list(found.values())
    i = 0
    while i < len(queue):
        H = queue[i]
        i += 1
        for A in atoms.values():
            if A.is_subgroup_of(H):
                continue
            J = H.join(A)
            k = J.key()
            if k not in found:
                found[k] = J
                queue.append(J)
    return sorted(found.values(), key=lambda N: (N.order(), N.key()))


def _o_upper_generic(G: PermGroup, P: Property) -> PermGroup:
    facs = orbit_factors(G)
    if len(facs) > 1:
        # G is the product of its normal factors; O^P(MN) = O^P(M) O^P(N)
        gens = [g for _, K in facs for g in o_upper_p(K, P).generators]
        return PermGroup(G.degree, gens)
    best = G
    for N in normal_subgroups(G):
        if N.order() < best.order() and P.holds_section(G, N):
            best = best.intersection(N)
    if not P.holds_section(G, best):
        raise PreconditionError(f"{P.name}: quotients are not closed under intersections")
    return best


def o_pe(G: PermGroup, P: Property) -> PermGroup:
    """O_{P,E}(G) = O_P(G) L_P(G)."""
    from .components import comp_p

    admit(P, SOLVABLE_EXTENSION_AXIOMS)
    return o_p(G, P).join(comp_p(G, P).layer)
