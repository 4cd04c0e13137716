"""P-components, (A,P)-components and the embedding of components of
invariant subgroups into (A,sol)-components of the ambient group."""

from __future__ import annotations

from dataclasses import dataclass, field

from .actions import CoprimeAction
from .errors import ConsistencyError, PreconditionError
from .group import PermGroup, orbit_factors
from .perm import conj
from .properties import Property, admit, get_property, o_p, o_upper_p
from .structure import components, enumerable, is_quasisimple, join_all


@dataclass
class PComponentSet:
    ambient: PermGroup
    property: Property
    members: list[PermGroup]
    layer: PermGroup
    notes: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def to_json(self) -> dict:
        from .textio import group_to_json

        out = {
            "ambient": group_to_json(self.ambient),
            "property": self.property.name,
            "members": [group_to_json(K) for K in self.members],
            "layer": group_to_json(self.layer),
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _sorted(groups) -> list[PermGroup]:
    return sorted(groups, key=lambda K: K.key())


def _section_quasisimple(K: PermGroup, O: PermGroup) -> bool:
    if O.is_trivial():
        return is_quasisimple(K)
    if O.order() == K.order():
        return False
    Q, _ = K.quotient(O)
    return is_quasisimple(Q)


def is_p_component(G: PermGroup, K: PermGroup, P: Property) -> bool:
    """K subnormal in G, K = O^P(K) and K/O_P(K) quasisimple."""
    if K.is_trivial() or not K.is_subgroup_of(G) or not G.is_subnormal(K):
        return False
    if o_upper_p(K, P).order() != K.order():
        return False
    return _section_quasisimple(K, o_p(K, P))


def _lift(G: PermGroup, L: PermGroup, P: Property) -> PermGroup:
    # O^P(X) >= O^P(Y) for every subgroup Y of X, so the descending chain
    # L >= O^P(L) >= ... stays above every P-component lying in L
    K = L
    while True:
        nxt = o_upper_p(K, P)
        if nxt.order() == K.order():
            return K
        K = nxt


def comp_p(G: PermGroup, P: Property) -> PComponentSet:
    """All P-components of G."""
    admit(P)
    cache = G._cache.setdefault("comp_p", {})
    if P.name in cache:
        return cache[P.name]
    notes: list[str] = []
    if not enumerable(G) and len(orbit_factors(G)) > 1:
        # a P-component lies in one of the direct factors (it is perfect and
        # would otherwise commute with G modulo its O_P)
        members = [K for _, F in orbit_factors(G) for K in comp_p(F, P).members]
    else:
        members = _comp_p_lift(G, P, notes)
    members = _sorted(members)
    res = PComponentSet(G, P, members, join_all(G, members), notes)
    cache[P.name] = res
    return res


def _comp_p_lift(G: PermGroup, P: Property, notes: list[str]) -> list[PermGroup]:
    O = o_p(G, P)
    if O.order() == G.order():
        return []
    if O.is_trivial():
        bars = [(C, C) for C in components(G)]
        phi = None
    else:
        Q, phi = G.quotient(O)
        kernel = O
        bars = [(C, phi.preimage(C, kernel=kernel)) for C in components(Q)]
    out: list[PermGroup] = []
    keys = set()
    for C, L in bars:
        K = _lift(G, L, P)
        image = K if phi is None else phi.image(K)
        if image.order() == C.order() and is_p_component(G, K, P):
            if K.key() not in keys:
                keys.add(K.key())
                out.append(K)
            continue
        if P.solvable_only:
            raise ConsistencyError(
                f"lift of a component of order {C.order()} failed the P-component test for {P.name}"
            )
        notes.append(f"component of order {C.order()} of G/O_P(G) has no P-component above it")
    return out


# -- (A,P)-components ----------------------------------------------------------------


def _check_invariant(act: CoprimeAction, H: PermGroup) -> None:
    if not H.is_subgroup_of(act.group):
        raise PreconditionError("H must be a subgroup of G")
    if not all(H.contains(conj(h, a)) for a in act.actor_basis for h in H.generators):
        raise PreconditionError("H is not A-invariant")


def _a_orbits(members: list[PermGroup], actors) -> list[list[int]]:
    index = {K.key(): i for i, K in enumerate(members)}
    seen = [False] * len(members)
    orbits = []
    for i in range(len(members)):
        if seen[i]:
            continue
        orb = [i]
        seen[i] = True
        j = 0
        while j < len(orb):
            for a in actors:
                k = index.get(members[orb[j]].conjugate(a).key())
                if k is None:
                    raise ConsistencyError("A does not permute the P-components")
                if not seen[k]:
                    seen[k] = True
                    orb.append(k)
            j += 1
        orbits.append(sorted(orb))
    return orbits


def _transitive_quasisimple(K: PermGroup, actors) -> bool:
    """K perfect, K/Z(K) a direct product of simple groups permuted
    transitively by conjugation with ``actors`` (which normalize K)."""
    if K.is_trivial() or not K.is_perfect():
        return False
    comps = components(K)
    if not comps or join_all(K, comps).order() != K.order():
        return False
    return len(_a_orbits(comps, actors)) == 1


def is_A_quasisimple(act: CoprimeAction, K: PermGroup) -> bool:
    _check_invariant(act, K)
    return _transitive_quasisimple(K, act.actor_basis)


def _section_a_quasisimple(K: PermGroup, O: PermGroup, actors) -> bool:
    if O.is_trivial():
        return _transitive_quasisimple(K, actors)
    if O.order() == K.order():
        return False
    KA = PermGroup(K.degree, list(K.generators) + list(actors))
    Q, phi = KA.quotient(O)
    return _transitive_quasisimple(phi.image(K), [phi(a) for a in actors])


def is_ap_component(act: CoprimeAction, H: PermGroup, K: PermGroup, P: Property) -> bool:
    """A-invariant, subnormal in H, K = O^P(K) and K/O_P(K) A-quasisimple."""
    actors = act.actor_basis
    if K.is_trivial() or not K.is_subgroup_of(H):
        return False
    if not all(K.contains(conj(k, a)) for a in actors for k in K.generators):
        return False
    if not H.is_subnormal(K) or o_upper_p(K, P).order() != K.order():
        return False
    return _section_a_quasisimple(K, o_p(K, P), actors)


def comp_ap(act: CoprimeAction, H: PermGroup, P: Property) -> PComponentSet:
    """Joins of the A-orbits on the P-components of H."""
    _check_invariant(act, H)
    base = comp_p(H, P)
    orbits = _a_orbits(base.members, act.actor_basis)
    members = _sorted(join_all(H, [base.members[i] for i in orb]) for orb in orbits)
    return PComponentSet(H, P, members, base.layer, list(base.notes))


def a_components(act: CoprimeAction, H: PermGroup | None = None) -> PComponentSet:
    """Comp_A(H) taken as Comp_{A,trivial}(H)."""
    return comp_ap(act, act.group if H is None else H, get_property("trivial"))


def embed_in_asol(act: CoprimeAction, H: PermGroup, K: PermGroup, P: Property) -> PermGroup | None:
    """The unique (A,sol)-component of G containing K, or None if there is none."""
    if not act.coprime:
        raise PreconditionError("embed_in_asol needs a coprime action")
    _check_invariant(act, H)
    cga = act.group.centralizer(act.actors)
    if not all(H.contains(conj(h, c)) for c in cga.generators for h in H.generators):
        raise PreconditionError("H is not C_G(A)-invariant")
    if not any(K == M for M in comp_ap(act, H, P).members):
        raise PreconditionError("K is not an (A,P)-component of H")
    tilde = comp_ap(act, act.group, get_property("solvable")).members
    hits = [M for M in tilde if K.is_subgroup_of(M)]
    if len(hits) > 1:
        raise ConsistencyError("K lies in two distinct (A,sol)-components")
    return hits[0] if hits else None
