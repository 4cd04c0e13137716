"""Faithful permutation representations of factor groups G/N."""

from __future__ import annotations

from collections import deque

from . import config
from .errors import PreconditionError, ResourceLimitError
from .group import Homomorphism, PermGroup
from .perm import mul

Perm = tuple[int, ...]


def quotient(G: PermGroup, N: PermGroup) -> tuple[PermGroup, Homomorphism]:
    """(Q, phi) with Q a faithful permutation image of G/N and phi: G -> Q.

    Strategy: the action of G on the orbits of N (the cosets of N G_a for
    all points a at once) is tried first and kept when its kernel is exactly
    N; otherwise G acts on the right cosets of N, represented by canonical
    (base-image-minimal) coset representatives.
    """
    if not G.is_normal(N):
        raise PreconditionError("quotient: N is not a normal subgroup of G")
    if N.is_trivial():
        ident = lambda g: tuple(g)  # noqa: E731
        return G, Homomorphism(G, G, list(G.generators), func=ident)
    index = G.order() // N.order()
    if index == 1:
        Q = PermGroup(1)
        return Q, Homomorphism(G, Q, [(0,)] * len(G.generators), func=lambda g: (0,))
    result = _block_action(G, N, index)
    if result is None:
        result = _coset_action(G, N, index)
    return result


def _block_action(G: PermGroup, N: PermGroup, index: int):
    blocks = [o for o in N.orbits()]
    where = {}
    for i, b in enumerate(blocks):
        for p in b:
            where[p] = i
    reps = [b[0] for b in blocks]

    def act_all(g) -> tuple[int, ...]:
        return tuple(where[g[r]] for r in reps)

    full = PermGroup(len(blocks), [act_all(g) for g in G.generators])
    if full.order() != index:
        return None
    # drop orbits of the block action while the action stays faithful
    keep = [o for o in full.orbits() if len(o) > 1]
    i = 0
    while i < len(keep):
        trial = keep[:i] + keep[i + 1:]
        pts = [p for o in trial for p in o]
        if pts and full.restriction(pts)[0].order() == index:
            keep = trial
        else:
            i += 1
    pts = [p for o in keep for p in o]
    relabel = {p: j for j, p in enumerate(pts)}
    sel = [reps[p] for p in pts]

    def act(g) -> tuple[int, ...]:
        return tuple(relabel[where[g[r]]] for r in sel)

    images = [act(g) for g in G.generators]
    Q = PermGroup(len(pts), images)
    return Q, Homomorphism(G, Q, images, func=act)


def _coset_action(G: PermGroup, N: PermGroup, index: int):
    cap = config.quotient_degree_cap()
    if index > cap:
        raise ResourceLimitError(f"quotient needs {index} cosets, above the cap {cap}")
    gbase = G.base
    nchain = N.chain_with_base(gbase)
    nlevels = nchain.levels

    def canon(x: Perm) -> tuple[Perm, tuple[int, ...]]:
        y = x
        for lv in nlevels:
            d = min(lv.orbit, key=y.__getitem__)
            if d != lv.point:
                y = mul(lv.transversal(d), y)
        return y, tuple(y[b] for b in gbase)

    e = tuple(range(G.degree))
    r0, k0 = canon(e)
    reps = [r0]
    index_of = {k0: 0}
    queue = deque([0])
    gens = [tuple(g) for g in G.generators]
    while queue:
        i = queue.popleft()
        for g in gens:
            r, k = canon(mul(reps[i], g))
            if k not in index_of:
                index_of[k] = len(reps)
                reps.append(r)
                queue.append(len(reps) - 1)
    if len(reps) != index:
        raise AssertionError("coset enumeration found the wrong number of cosets")

    def act(g) -> tuple[int, ...]:
        return tuple(index_of[canon(mul(r, g))[1]] for r in reps)

    images = [act(g) for g in gens]
    Q = PermGroup(len(reps), images)
    return Q, Homomorphism(G, Q, images, func=act)
