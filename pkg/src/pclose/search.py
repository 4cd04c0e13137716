"""Backtrack searches over the base-image tree: centralizers, normalizers,
intersections.

All three are instances of one search for the subgroup
``{g in G : test(g)}`` (the test must define a subgroup).  The search works
level by level from the bottom of the stabilizer chain: once
``K = C ∩ G^(i+1)`` is known, ``C ∩ G^(i)`` is obtained by finding, for each
K-orbit representative γ of the i-th basic orbit, one element of C mapping
b_i to γ.  A failed γ rules out its whole orbit under the subgroup found so
far.
"""

from __future__ import annotations

from typing import Callable, Sequence

from . import config
from .bsgs import Chain, chain_with_known_order
from .errors import PreconditionError
from .group import PermGroup
from .perm import conj, cycles, inv, is_identity, mul

Perm = tuple[int, ...]


def _orbit(p: int, gens: Sequence[Perm]) -> set[int]:
    seen = {p}
    stack = [p]
    while stack:
        q = stack.pop()
        for g in gens:
            r = g[q]
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


class _Search:
    """One level-by-level subgroup search.

    ``prune(level, image, images)`` may reject a partial assignment
    where ``image`` is the image chosen for base point ``level``; ``images``
    holds the images of earlier base points.  ``full_from`` is the first
    level j such that every element of G^(j) passes the test, which lets a
    partial product be tested directly.
    """

    def __init__(
        self,
        chain: Chain,
        test: Callable[[Perm], bool],
        prune: Callable[[int, int, list[int]], bool] | None = None,
        full_from: int | None = None,
    ):
        self.chain = chain
        self.levels = chain.levels
        self.test = test
        self.prune = prune
        k = len(self.levels)
        self.full_from = k if full_from is None else full_from
        self.base = [lv.point for lv in self.levels]

    def run(self) -> list[Perm]:
        k = len(self.levels)
        # G^(full_from) lies entirely in the result
        found: list[Perm] = list(self.levels[self.full_from].gens) if self.full_from < k else []
        for i in range(min(self.full_from, k) - 1, -1, -1):
            lv = self.levels[i]
            b = lv.point
            # generators found so far all lie in G^(i)
            reached = _orbit(b, found)
            failed: set[int] = set()
            for gamma in sorted(lv.orbit):
                if gamma in reached or gamma in failed:
                    continue
                g = self._find(i, gamma)
                if g is None:
                    failed |= _orbit(gamma, found)
                else:
                    found.append(g)
                    reached = _orbit(b, found)
        return found

    def _find(self, i: int, gamma: int) -> Perm | None:
        lv = self.levels[i]
        # the element fixes every earlier base point
        images = list(self.base)
        images[i] = gamma
        partial = lv.transversal(gamma)
        if self.prune is not None and self.prune(i, gamma, images):
            return None
        return self._descend(i + 1, partial, images)

    def _descend(self, j: int, partial: Perm, images: list[int]) -> Perm | None:
        if j >= len(self.levels) or j >= self.full_from:
            return partial if self.test(partial) else None
        lv = self.levels[j]
        for d in lv.orbit:
            img = partial[d]
            images[j] = img
            if self.prune is not None and self.prune(j, img, images):
                continue
            r = self._descend(j + 1, mul(lv.transversal(d), partial), images)
            if r is not None:
                return r
        return None


def _check_degree(G: PermGroup, degree: int) -> None:
    if G.degree != degree:
        raise PreconditionError(f"degree mismatch: {G.degree} vs {degree}")


def centralizer(G: PermGroup, target) -> PermGroup:
    """C_G(target) for a permutation or a group (need not lie in G)."""
    if isinstance(target, PermGroup):
        _check_degree(G, target.degree)
        C = G
        for x in target.generators:
            C = centralizer_element(C, x)
        return C
    x = tuple(target)
    _check_degree(G, len(x))
    return centralizer_element(G, x)


def centralizer_element(G: PermGroup, x: Perm) -> PermGroup:
    x = tuple(x)
    if G.is_trivial() or is_identity(x):
        return G
    if all(mul(g, x) == mul(x, g) for g in G.generators):
        return G
    n = G.degree
    # base adapted to x: points of long x-cycles first, each cycle consecutively
    cyc = sorted(cycles(x), key=lambda c: (-len(c), c[0]))
    prefix = [p for c in cyc for p in c]
    chain = chain_with_known_order(n, G.chain, prefix)
    levels = chain.levels
    base = [lv.point for lv in levels]
    pos = {b: i for i, b in enumerate(base)}
    cyclen = [1] * n
    for c in cycles(x):
        for p in c:
            cyclen[p] = len(c)
    xinv = inv(x)
    # forced[j] = l when b_j = x(b_l) for an earlier base point b_l
    forced = [None] * len(base)
    for j, b in enumerate(base):
        l = pos.get(xinv[b])
        if l is not None and l < j:
            forced[j] = l
    full_from = len(levels)
    while full_from > 0:
        lv = levels[full_from - 1]
        if all(mul(g, x) == mul(x, g) for g in lv.gens):
            full_from -= 1
        else:
            break

    def prune(j: int, img: int, images: list[int]) -> bool:
        if cyclen[img] != cyclen[base[j]]:
            return True
        l = forced[j]
        return l is not None and img != x[images[l]]

    def test(g: Perm) -> bool:
        return mul(g, x) == mul(x, g)

    gens = _Search(chain, test, prune, full_from).run()
    return PermGroup(n, gens)


def _subgroup_search(G: PermGroup, test, prune=None, prefix: Sequence[int] = ()) -> PermGroup:
    chain = chain_with_known_order(G.degree, G.chain, prefix) if prefix else G.chain
    gens = _Search(chain, test, prune).run()
    return PermGroup(G.degree, gens)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """N_G(H) (H need not lie in G)."""
    _check_degree(G, H.degree)
    if H.is_trivial() or G.normalizes(H):
        return G
    if G.order() <= config.enum_bound() // 10:
        gens = [g for g in G.elements() if all(H.contains(conj(h, g)) for h in H.generators)]
        return PermGroup(G.degree, gens)
    horbs = H.orbits()
    osize = {p: len(o) for o in horbs for p in o}
    # points of H's large orbits first; elements of N_G(H) permute H-orbits
    prefix = [p for o in sorted(horbs, key=lambda o: (-len(o), o[0])) for p in o]
    chain = chain_with_known_order(G.degree, G.chain, prefix)
    base = [lv.point for lv in chain.levels]

    def prune(j: int, img: int, images: list[int]) -> bool:
        return osize[img] != osize[base[j]]

    def test(g: Perm) -> bool:
        return all(H.contains(conj(h, g)) for h in H.generators)

    return PermGroup(G.degree, _Search(chain, test, prune).run())


def intersection(G: PermGroup, H: PermGroup) -> PermGroup:
    _check_degree(G, H.degree)
    if G.is_trivial() or H.is_trivial():
        return PermGroup(G.degree)
    if G.is_subgroup_of(H):
        return G
    if H.is_subgroup_of(G):
        return H
    small, big = (G, H) if G.order() <= H.order() else (H, G)
    if small.order() <= config.enum_bound() // 10:
        return PermGroup(G.degree, [g for g in small.elements() if big.contains(g)])
    # search over the smaller group; prune by consistency with the other group's chain
    chain = small.chain
    base = [lv.point for lv in chain.levels]
    other = chain_with_known_order(G.degree, big.chain, base)
    olevels = other.levels
    opos = {lv.point: i for i, lv in enumerate(olevels)}

    def prune(j: int, img: int, images: list[int]) -> bool:
        # is there an element of `big` sending b_0..b_j to images[0..j]?
        # (levels of `big` not in this base are unconstrained and skipped)
        target = {base[t]: images[t] for t in range(j + 1)}
        return not _prefix_consistent(olevels, opos, target)

    def test(g: Perm) -> bool:
        return big.contains(g)

    return PermGroup(G.degree, _Search(chain, test, prune).run())


def _prefix_consistent(olevels, opos, target: dict[int, int]) -> bool:
    """Cheap necessary condition for some element of the chain's group to map
    each key of target to its value."""
    remaining = dict(target)
    for lv in olevels:
        if not remaining:
            return True
        b = lv.point
        if b not in remaining:
            return True
        p = remaining.pop(b)
        if p not in lv.parent:
            return False
        w = lv.transversal_inv(p)
        remaining = {k: w[v] for k, v in remaining.items()}
    return all(k == v for k, v in remaining.items())


def element_filter_centralizer(G: PermGroup, x: Perm) -> PermGroup:
    """Brute-force C_G(x); used as a cross-check oracle."""
    return PermGroup(G.degree, [g for g in G.elements() if mul(g, x) == mul(x, g)])
