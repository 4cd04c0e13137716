"""A-signalizer functors: verification, hyperplane values, completeness,
derived functors, the subfunctor psi and the completeness harness for
functors whose values have A-trivial sol-components.

Values are stored per subgroup of order r of A, keyed by the normalized
exponent vector of a generator, so theta(a) = theta(a^k) holds by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .actions import CoprimeAction
from .closures import fixed_points, fixed_points_of, o_np_invariant, o_p_invariant
from .components import comp_p
from .errors import PreconditionError, TheoremViolation
from .group import PermGroup
from .perm import conj, format_cycles
from .properties import Property, get_property
from .structure import join_all
from .textio import format_word

Vec = tuple[int, ...]


class SignalizerFunctor:
    def __init__(self, action: CoprimeAction, values: dict[Vec, PermGroup], name: str = ""):
        self.action = action
        self.name = name
        self._values: dict[Vec, PermGroup] = {}
        for v in action.cyclic_vectors:
            if v not in values:
                raise PreconditionError(f"no value given for {format_word(v)}")
            H = values[v]
            if H.degree != action.group.degree:
                raise PreconditionError("functor values must have the group's degree")
            self._values[v] = H

    @classmethod
    def from_values(cls, action: CoprimeAction, values: dict, name: str = "") -> "SignalizerFunctor":
        normalized = {action.normalize_vector(v): H for v, H in values.items()}
        return cls(action, normalized, name)

    @classmethod
    def from_function(cls, action: CoprimeAction, fn: Callable[[Vec], PermGroup], name: str = "") -> "SignalizerFunctor":
        return cls(action, {v: fn(v) for v in action.cyclic_vectors}, name)

    @property
    def vectors(self) -> list[Vec]:
        return list(self.action.cyclic_vectors)

    def value(self, vec) -> PermGroup:
        return self._values[self.action.normalize_vector(vec)]

    def values(self) -> dict[Vec, PermGroup]:
        return dict(self._values)

    def size(self) -> int:
        """Sum of |theta(a)| over the subgroups <a> of order r."""
        return sum(H.order() for H in self._values.values())

    def theta_A(self) -> PermGroup:
        """theta(A) = C_{theta(a)}(A), read off at the first vector."""
        return fixed_points(self.action, None, self._values[self.vectors[0]])

    def __repr__(self) -> str:
        return f"SignalizerFunctor({self.name or self.action.describe()})"


# -- standard functors ----------------------------------------------------------------


def centralizer_functor(act: CoprimeAction, N: PermGroup | None = None) -> SignalizerFunctor:
    """theta(a) = C_N(a) for an A-invariant normal subgroup N (G by default)."""
    N = act.group if N is None else N
    return SignalizerFunctor.from_function(act, lambda v: fixed_points_of(act, v, N), name="centralizer")


def trivial_functor(act: CoprimeAction) -> SignalizerFunctor:
    return SignalizerFunctor.from_function(act, lambda v: PermGroup(act.group.degree), name="trivial")


def broken_functor(act: CoprimeAction) -> SignalizerFunctor:
    """Full centralizer at the first basis vector and 1 elsewhere; fails
    balance whenever some C_G(e1) element is fixed by another actor."""
    first = tuple([1] + [0] * (act.rank - 1))
    vals = {
        v: (fixed_points_of(act, v) if v == first else PermGroup(act.group.degree)) for v in act.cyclic_vectors
    }
    return SignalizerFunctor(act, vals, name="broken")


def standard_functors(act: CoprimeAction, which=("centralizer", "trivial", "derived-centralizer")):
    out = []
    if "centralizer" in which:
        out.append(("centralizer", centralizer_functor(act)))
    if "trivial" in which:
        out.append(("trivial", trivial_functor(act)))
    if "derived-centralizer" in which:
        D = act.group.derived_subgroup()
        if not D.is_trivial() and D.order() != act.group.order():
            f = centralizer_functor(act, D)
            f.name = "derived-centralizer"
            out.append(("derived-centralizer", f))
    return out


# -- verification -----------------------------------------------------------------------


@dataclass
class FunctorReport:
    passed: bool
    failures: list[dict] = field(default_factory=list)
    checks: int = 0

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": self.checks, "failures": self.failures}


def functor_verify(f: SignalizerFunctor) -> FunctorReport:
    """theta(a) <= C_G(a), A-invariance, r'-order and balance
    theta(a) cap C_G(b) <= theta(b) for all a, b."""
    act = f.action
    G, r = act.group, act.prime
    failures: list[dict] = []
    checks = 0
    for v in f.vectors:
        H = f.value(v)
        a = act.element(v)
        w = format_word(v)
        checks += 4
        if not H.is_subgroup_of(G):
            failures.append({"claim": "theta(a) <= G", "a": w})
            continue
        bad = next((h for h in H.generators if conj(h, a) != h), None)
        if bad is not None:
            failures.append({"claim": "theta(a) <= C_G(a)", "a": w, "element": format_cycles(bad)})
        bad_a = next((x for x in act.actor_basis for h in H.generators if not H.contains(conj(h, x))), None)
        if bad_a is not None:
            failures.append({"claim": "theta(a) is A-invariant", "a": w, "actor": format_cycles(bad_a)})
        if H.order() % r == 0:
            failures.append({"claim": "theta(a) is an r'-group", "a": w, "order": H.order()})
    if failures:
        return FunctorReport(False, failures, checks)
    for v in f.vectors:
        H = f.value(v)
        for u in f.vectors:
            if u == v:
                continue
            checks += 1
            C = fixed_points_of(act, u, H)
            T = f.value(u)
            bad = next((c for c in C.generators if not T.contains(c)), None)
            if bad is not None:
                failures.append(
                    {
                        "claim": "balance",
                        "a": format_word(v),
                        "b": format_word(u),
                        "element": format_cycles(bad),
                        "intersection_order": C.order(),
                    }
                )
    return FunctorReport(not failures, failures, checks)


# -- hyperplanes --------------------------------------------------------------------------


def _hyperplane_vectors(act: CoprimeAction, B) -> list[Vec]:
    """Normalized vectors of the order-r subgroups inside the hyperplane B.

    B is either a subgroup of A of index r or a nonzero functional."""
    if act.rank < 2:
        raise PreconditionError("A has rank 1, so hyp(A) is empty")
    r = act.prime
    if isinstance(B, PermGroup):
        if not B.is_subgroup_of(act.actors) or B.order() * r != act.actors.order():
            raise PreconditionError("B must be a subgroup of index r in A")
        return [v for v in act.cyclic_vectors if B.contains(act.element(v))]
    fvec = act.normalize_vector(B)
    return [v for v in act.cyclic_vectors if sum(x * y for x, y in zip(fvec, v)) % r == 0]


def hyperplane_group(act: CoprimeAction, functional) -> PermGroup:
    return act.subgroup_of_vectors(_hyperplane_vectors(act, functional))


def functor_restrict_hyperplane(f: SignalizerFunctor, B) -> PermGroup:
    """theta(B) = theta(b) cap C_G(B), checked to be independent of b in B#."""
    act = f.action
    vecs = _hyperplane_vectors(act, B)
    Bgroup = act.subgroup_of_vectors(vecs)
    values = [fixed_points(act, Bgroup, f.value(v)) for v in vecs]
    first = values[0]
    for v, X in zip(vecs, values):
        if X != first:
            raise TheoremViolation(
                "theta(B) depends on the choice of b",
                {"b1": format_word(vecs[0]), "b2": format_word(v), "orders": [first.order(), X.order()]},
            )
    return first


# -- completeness ---------------------------------------------------------------------------


@dataclass
class CompletenessReport:
    closure: PermGroup
    closure_is_rprime: bool
    fixed_point_match: dict[Vec, bool]
    complete: bool
    hyperplane_closure_match: bool | None = None

    def to_json(self) -> dict:
        from .textio import group_to_json

        return {
            "closure": group_to_json(self.closure),
            "closure_is_rprime": self.closure_is_rprime,
            "fixed_point_match": {format_word(v): ok for v, ok in self.fixed_point_match.items()},
            "complete": self.complete,
            "hyperplane_closure_match": self.hyperplane_closure_match,
        }


def closure(f: SignalizerFunctor) -> PermGroup:
    return join_all(f.action.group, [f.value(v) for v in f.vectors])


def completeness(f: SignalizerFunctor) -> CompletenessReport:
    act = f.action
    S = closure(f)
    rprime = S.order() % act.prime != 0
    match = {}
    for v in f.vectors:
        match[v] = rprime and fixed_points_of(act, v, S) == f.value(v)
    hyp = None
    if act.rank >= 2:
        hvals = [functor_restrict_hyperplane(f, fvec) for fvec, _ in act.hyperplanes()]
        hyp = join_all(act.group, hvals) == S
    return CompletenessReport(S, rprime, match, rprime and all(match.values()), hyp)


def is_theta_subgroup(f: SignalizerFunctor, X: PermGroup) -> bool:
    """An A-invariant r'-subgroup X with C_X(a) <= theta(a) for all a."""
    act = f.action
    if X.order() % act.prime == 0:
        return False
    if not all(X.contains(conj(x, a)) for a in act.actor_basis for x in X.generators):
        return False
    return all(fixed_points_of(act, v, X).is_subgroup_of(f.value(v)) for v in f.vectors)


# -- derived functors and psi -----------------------------------------------------------------


@dataclass
class DerivedFunctor:
    functor: SignalizerFunctor
    report: FunctorReport


def derive_functor(f: SignalizerFunctor, mode: str, P: Property | str) -> DerivedFunctor:
    """theta_P(a) = O_P(theta(a);A) (mode "P") or O_nP(theta(a);A) (mode "nP"),
    re-verified as a signalizer functor."""
    if isinstance(P, str):
        P = get_property(P)
    act = f.action
    if mode == "P":
        fn = lambda v: o_p_invariant(act, P, f.value(v))  # noqa: E731
    elif mode == "nP":
        fn = lambda v: o_np_invariant(act, P, f.value(v))  # noqa: E731
    else:
        raise PreconditionError(f"unknown mode {mode!r}")
    g = SignalizerFunctor.from_function(act, fn, name=f"{f.name}_{mode}[{P.name}]")
    return DerivedFunctor(g, functor_verify(g))


def subfunctor_psi(f: SignalizerFunctor, t) -> SignalizerFunctor:
    """psi(a) = [theta(a), t](theta(a) cap D), D = <C_{[theta(a),t]}(t) : a>."""
    act = f.action
    tvec = act.normalize_vector(t)
    T = PermGroup(act.group.degree, [act.element(tvec)])
    W = act.wrapper
    comms = {v: W.commutator(f.value(v), T) for v in f.vectors}
    D = join_all(act.group, [fixed_points(act, T, comms[v]) for v in f.vectors])
    vals = {}
    for v in f.vectors:
        H = f.value(v)
        vals[v] = comms[v].join(H.intersection(D))
    return SignalizerFunctor(act, vals, name=f"psi[{format_word(tvec)}]")


def verify_subfunctor(psi: SignalizerFunctor, f: SignalizerFunctor) -> FunctorReport:
    """psi is a theta(A)-invariant subfunctor of f."""
    rep = functor_verify(psi)
    failures = list(rep.failures)
    checks = rep.checks
    tA = f.theta_A()
    for v in f.vectors:
        checks += 2
        if not psi.value(v).is_subgroup_of(f.value(v)):
            failures.append({"claim": "psi(a) <= theta(a)", "a": format_word(v)})
        if not tA.normalizes(psi.value(v)):
            failures.append({"claim": "theta(A) normalizes psi(a)", "a": format_word(v)})
    return FunctorReport(not failures, failures, checks)


# -- the completeness harness ------------------------------------------------------------------


@dataclass
class GLReport:
    hypothesis: bool
    complete: bool | None
    passed: bool
    nontrivial: list[str]
    component_counts: dict[Vec, int]
    completeness: CompletenessReport | None = None

    def to_json(self) -> dict:
        return {
            "hypothesis": self.hypothesis,
            "complete": self.complete,
            "passed": self.passed,
            "nontrivially_permuted": self.nontrivial,
            "sol_component_counts": {format_word(v): n for v, n in self.component_counts.items()},
            "completeness": self.completeness.to_json() if self.completeness else None,
        }


def acts_trivially_on(actors, comps: list[PermGroup]) -> bool:
    return all(K.conjugate(a) == K for a in actors for K in comps)


def gorenstein_lyons_check(f: SignalizerFunctor) -> GLReport:
    """If A normalizes every sol-component of every theta(a), theta must be complete."""
    act = f.action
    if act.rank < 3:
        raise PreconditionError("the harness needs A of rank at least 3")
    sol = get_property("solvable")
    nontrivial = []
    counts = {}
    for v in f.vectors:
        comps = comp_p(f.value(v), sol).members
        counts[v] = len(comps)
        if not acts_trivially_on(act.actor_basis, comps):
            nontrivial.append(format_word(v))
    hyp = not nontrivial
    if not hyp:
        return GLReport(False, None, True, nontrivial, counts)
    rep = completeness(f)
    return GLReport(True, rep.complete, rep.complete, nontrivial, counts, rep)
