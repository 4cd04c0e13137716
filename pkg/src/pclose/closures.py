"""Fixed points, invariant-subgroup enumeration and the invariant closures
O_P(G;A), O_nP(G) and O_nP(G;A).

All closures are joins over families of subgroups that are closed under
taking invariant subgroups, so each equals the join of the invariant
"atoms" <x^S> (S the acting group) that belong to the family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import config
from .actions import CoprimeAction
from .enumerated import Enumerated
from .errors import PreconditionError, ResourceLimitError, TheoremViolation
from .group import PermGroup, orbit_factors
from .perm import conj, order as perm_order, power
from .properties import EXTENSION_AXIOMS, SOLVABLE_EXTENSION_AXIOMS, Property, admit
from .structure import join_all


@dataclass
class InvariantSubgroupFamily:
    action: CoprimeAction
    stabilizing: PermGroup
    members: list[PermGroup]

    def __len__(self) -> int:
        return len(self.members)

    def join(self) -> PermGroup:
        return join_all(self.action.group, self.members)


def _ambient(act: CoprimeAction, H: PermGroup | None) -> PermGroup:
    if H is None:
        return act.group
    if not H.is_subgroup_of(act.group):
        raise PreconditionError("H must be a subgroup of G")
    if not all(H.contains(conj(h, a)) for a in act.actor_basis for h in H.generators):
        raise PreconditionError("H is not A-invariant")
    return H


def fixed_points(act: CoprimeAction, S: PermGroup | None = None, H: PermGroup | None = None) -> PermGroup:
    """C_H(S) for S <= A (S = A by default, H = G by default)."""
    H = _ambient(act, H)
    if S is None:
        S = act.actors
    elif not S.is_subgroup_of(act.actors):
        raise PreconditionError("S must be a subgroup of A")
    key = ("fix", tuple(sorted(S.generators)))
    cache = H._cache.setdefault("fixed", {})
    if key not in cache:
        cache[key] = H.centralizer(S) if not S.is_trivial() else H
    return cache[key]


def fixed_points_of(act: CoprimeAction, vec, H: PermGroup | None = None) -> PermGroup:
    """C_H(a) for the actor element with exponent vector vec."""
    return fixed_points(act, PermGroup(act.group.degree, [act.element(vec)]), H)


def commutator_with(act: CoprimeAction, S: PermGroup | None = None, H: PermGroup | None = None) -> PermGroup:
    """[H, S] for S <= A."""
    H = _ambient(act, H)
    S = act.actors if S is None else S
    return act.wrapper.commutator(H, S)


def is_invariant(H: PermGroup, acting) -> bool:
    return all(H.contains(conj(h, s)) for s in acting for h in H.generators)


def _acting(act: CoprimeAction, H: PermGroup, mode) -> tuple[list, PermGroup]:
    """Generators of the stabilizing group A C_H(A) or A C_H(a)."""
    if mode == "ACGA":
        C = fixed_points(act, None, H)
    elif isinstance(mode, tuple) and mode[0] == "ACGa":
        C = fixed_points_of(act, mode[1], H)
    else:
        raise PreconditionError(f"unknown stabilizer mode {mode!r}")
    gens = list(act.actor_basis) + list(C.generators)
    return gens, PermGroup(H.degree, gens)


def enumerate_invariant_subgroups(
    act: CoprimeAction,
    stabilizer_mode="ACGA",
    filter: Property | None = None,
    H: PermGroup | None = None,
) -> InvariantSubgroupFamily:
    """All subgroups of H invariant under A C_H(A) (or A C_H(a)), optionally
    restricted to P-subgroups."""
    H = _ambient(act, H)
    gens, stab = _acting(act, H, stabilizer_mode)
    enum = Enumerated(H)
    members = [enum.group_of(m) for m in enum.invariant_subgroups(gens)]
    if filter is not None:
        members = [X for X in members if filter.predicate(X)]
    return InvariantSubgroupFamily(act, stab, members)


def all_subgroups(G: PermGroup) -> list[PermGroup]:
    enum = Enumerated(G)
    return [enum.group_of(m) for m in enum.all_subgroups()]


def _atom_join(H: PermGroup, acting, keep) -> PermGroup:
    if H.order() > config.oracle_bound():
        return _atom_join_by_orbits(H, acting, keep)
    enum = Enumerated(H)
    parts = []
    for m in enum.invariant_atoms(acting):
        X = enum.group_of(m)
        if keep(X):
            parts.append(X)
    return join_all(H, parts)


def _atom_join_by_orbits(H: PermGroup, acting, keep) -> PermGroup:
    """The same join for groups above the table bound: one atom <x^S> per
    S-orbit on the elements of H, skipping elements already in the join."""
    from .structure import enumerable

    if not enumerable(H):
        raise ResourceLimitError(f"group of order {H.order()} is too large for atom enumeration")
    J = PermGroup(H.degree)
    seen: set = set()
    for x in H.elements():
        if x in seen or J.contains(x):
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for s in acting:
                z = conj(y, s)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        # <y^S> = <(y^k)^S> whenever y^k generates <y>
        for y in orbit:
            o = perm_order(y)
            seen.update(power(y, k) for k in range(1, o) if math.gcd(k, o) == 1)
        X = PermGroup(H.degree, sorted(orbit))
        if keep(X):
            J = J.join(X)
    return J


def _closure_cache(act: CoprimeAction) -> dict:
    # keyed by group fingerprint, so equal subgroups built separately share results
    return act.__dict__.setdefault("_closure_cache", {})


def invariant_direct_factors(act: CoprimeAction, H: PermGroup) -> list[PermGroup]:
    """Split an A-invariant H into A-invariant direct factors.

    Starts from the orbit splitting of H and merges factors whose supports
    are moved into each other by A.  Returns [H] when no splitting exists."""
    facs = orbit_factors(H)
    if len(facs) <= 1:
        return [H]
    owner = {p: i for i, (block, _) in enumerate(facs) for p in block}
    parent = list(range(len(facs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, (block, _) in enumerate(facs):
        for a in act.actor_basis:
            j = owner.get(a[block[0]])
            if j is None or any(owner.get(a[p]) != j for p in block):
                return [H]
            parent[find(i)] = find(j)
    groups: dict[int, list[PermGroup]] = {}
    for i, (_, K) in enumerate(facs):
        groups.setdefault(find(i), []).append(K)
    return [join_all(H, ks) for _, ks in sorted(groups.items())]


def _split_join(act: CoprimeAction, H: PermGroup, fn) -> PermGroup | None:
    """Join of fn over the A-invariant direct factors of a group too large
    to enumerate, or None when H does not split.

    For extension-closed P the invariant closures respect such splittings:
    the projections of the closure to the factors are again invariant, so
    the closure is the product of the closures of the factors."""
    if H.order() <= config.oracle_bound():
        return None
    parts = invariant_direct_factors(act, H)
    if len(parts) <= 1:
        return None
    return join_all(H, [fn(K) for K in parts])


def o_p_invariant(act: CoprimeAction, P: Property, H: PermGroup | None = None) -> PermGroup:
    """O_P(H;A): the join of all A C_H(A)-invariant P-subgroups of H.

    Raises TheoremViolation if the join is not itself a P-group."""
    admit(P, EXTENSION_AXIOMS)
    H = _ambient(act, H)
    cache = _closure_cache(act)
    key = ("o_p", P.name, H.key())
    if key in cache:
        return cache[key]
    if P.predicate(H):
        res = H
    elif (res := _split_join(act, H, lambda K: o_p_invariant(act, P, K))) is not None:
        pass
    else:
        gens, _ = _acting(act, H, "ACGA")
        res = _atom_join(H, gens, P.predicate)
    if not P.predicate(res):
        raise TheoremViolation(
            "the invariant P-closure is not a P-group",
            {"property": P.name, "closure_order": res.order()},
        )
    cache[key] = res
    return res


def is_near_ap(act: CoprimeAction, H: PermGroup, P: Property) -> bool:
    """C_H(A) is a P-group."""
    H = _ambient(act, H)
    return P.predicate(fixed_points(act, None, H))


def o_np_invariant(act: CoprimeAction, P: Property, H: PermGroup | None = None) -> PermGroup:
    """O_nP(H;A): the join of A C_H(A)-invariant near (A,P)-subgroups."""
    admit(P, SOLVABLE_EXTENSION_AXIOMS)
    H = _ambient(act, H)
    cache = _closure_cache(act)
    key = ("o_np", P.name, H.key())
    if key in cache:
        return cache[key]
    if is_near_ap(act, H, P):
        res = H
    elif act.coprime and (res := _split_join(act, H, lambda K: o_np_invariant(act, P, K))) is not None:
        # fixed points of a coprime action map onto fixed points of quotients,
        # so projections of near (A,P)-subgroups are near (A,P)-subgroups
        pass
    else:
        gens, _ = _acting(act, H, "ACGA")
        res = _atom_join(H, gens, lambda X: P.predicate(X.centralizer(act.actors)))
    if not is_near_ap(act, res, P):
        raise TheoremViolation(
            "O_nP(G;A) is not a near (A,P)-group", {"property": P.name, "closure_order": res.order()}
        )
    cache[key] = res
    return res


def o_np_normal(act: CoprimeAction, P: Property, H: PermGroup | None = None) -> PermGroup:
    """O_nP(H): the join of A-invariant normal near (A,P)-subgroups."""
    admit(P, SOLVABLE_EXTENSION_AXIOMS)
    H = _ambient(act, H)
    if is_near_ap(act, H, P):
        return H
    gens = list(H.generators) + list(act.actor_basis)
    res = _atom_join(H, gens, lambda X: P.predicate(X.centralizer(act.actors)))
    if not is_near_ap(act, res, P):
        raise TheoremViolation("O_nP(G) is not a near (A,P)-group", {"property": P.name, "closure_order": res.order()})
    return res
