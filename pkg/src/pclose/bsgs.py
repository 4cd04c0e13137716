"""Stabilizer chains (base and strong generating set) for permutation groups.

A chain is a list of levels.  Level i stores the base point b_i, the strong
generators fixing b_0..b_{i-1}, and the orbit of b_i under them together with
a Schreier tree.  Every group element factors uniquely as
``g = u_k * ... * u_1 * u_0`` where u_i is the transversal element of level i
sending b_i to the appropriate image.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .perm import identity, inv, is_identity, mul

Perm = tuple[int, ...]

# Transversal elements are cached once an orbit is small enough that storing
# degree * orbit_length integers is cheap.
_CACHE_LIMIT = 4_000_000


class Level:
    __slots__ = ("point", "gens", "ginv", "orbit", "parent", "_u", "_uinv", "checked", "degree", "_cache")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.degree = degree
        self.gens: list[Perm] = []
        self.ginv: list[Perm] = []
        self.orbit: list[int] = [point]
        # parent[p] = index of the generator that first reached p (-1 at the root)
        self.parent: dict[int, int] = {point: -1}
        self._u: dict[int, Perm] = {point: identity(degree)}
        self._uinv: dict[int, Perm] = {point: identity(degree)}
        self.checked: set[tuple[int, int]] = set()
        self._cache = True

    def add_gen(self, g: Perm) -> None:
        self.gens.append(g)
        self.ginv.append(inv(g))
        gi = len(self.gens) - 1
        parent = self.parent
        orbit = self.orbit
        # new generator applied to old points, then closure under all generators
        start = len(orbit)
        for p in list(orbit):
            q = g[p]
            if q not in parent:
                parent[q] = gi
                orbit.append(q)
        i = start
        while i < len(orbit):
            p = orbit[i]
            for j, h in enumerate(self.gens):
                q = h[p]
                if q not in parent:
                    parent[q] = j
                    orbit.append(q)
            i += 1
        self._cache = self.degree * len(orbit) <= _CACHE_LIMIT

    def transversal(self, p: int) -> Perm:
        """u with point^u = p."""
        u = self._u.get(p)
        if u is not None:
            return u
        path = []
        q = p
        while q not in self._u:
            j = self.parent[q]
            path.append(j)
            q = self.ginv[j][q]
        u = self._u[q]
        for j in reversed(path):
            u = mul(u, self.gens[j])
            q = self.gens[j][q]
            if self._cache:
                self._u[q] = u
        return u

    def transversal_inv(self, p: int) -> Perm:
        w = self._uinv.get(p)
        if w is None:
            w = inv(self.transversal(p))
            if self._cache:
                self._uinv[p] = w
        return w

    def __len__(self) -> int:
        return len(self.orbit)


class Chain:
    def __init__(self, degree: int, levels: list[Level] | None = None):
        self.degree = degree
        self.levels: list[Level] = levels or []
        self.point_order: list[int] = list(range(degree))
        # residues fixing every admissible base point (see schreier_sims)
        self.kernel: list[Perm] = []

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.orbit)
        return n

    def strong_generators(self) -> list[Perm]:
        if not self.levels:
            return []
        return list(self.levels[0].gens)

    def sift(self, g: Sequence[int], start: int = 0) -> tuple[Perm, int]:
        """Strip g through levels start..; return (residue, level where it stopped)."""
        g = tuple(g)
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            p = g[lv.point]
            if p not in lv.parent:
                return g, i
            if p != lv.point:
                g = mul(g, lv.transversal_inv(p))
        return g, len(self.levels)

    def contains(self, g: Sequence[int]) -> bool:
        h, _ = self.sift(g)
        return is_identity(h)

    def random_element(self, rng: random.Random) -> Perm:
        g = identity(self.degree)
        for lv in reversed(self.levels):
            p = lv.orbit[rng.randrange(len(lv.orbit))]
            g = mul(g, lv.transversal(p))
        return g

    def elements(self) -> Iterable[Perm]:
        elems: list[Perm] = [identity(self.degree)]
        for lv in reversed(self.levels):
            us = [lv.transversal(p) for p in lv.orbit]
            elems = [mul(h, u) for h in elems for u in us]
        return elems

    def base_images(self, g: Sequence[int]) -> tuple[int, ...]:
        return tuple(g[b] for b in self.base)

    def element_from_base_images(self, images: Sequence[int]) -> Perm | None:
        """The unique element with the given base image, or None."""
        # g = u_k ... u_0, so the image required of u_i is images[i] pulled
        # back through u_0, ..., u_{i-1}.
        g = identity(self.degree)
        rest = list(images)
        factors = []
        for i, lv in enumerate(self.levels):
            p = rest[i]
            if p not in lv.parent:
                return None
            u = lv.transversal(p)
            factors.append(u)
            uinv = lv.transversal_inv(p)
            for j in range(i + 1, len(rest)):
                rest[j] = uinv[rest[j]]
        for u in reversed(factors):
            g = mul(g, u)
        return g


def _first_moved(g: Perm, order: Sequence[int]) -> int | None:
    for p in order:
        if g[p] != p:
            return p
    return None


def _point_order(degree: int, prefix: Sequence[int] | None) -> list[int]:
    if not prefix:
        return list(range(degree))
    seen = set(prefix)
    return list(prefix) + [p for p in range(degree) if p not in seen]


def schreier_sims(
    degree: int,
    gens: Iterable[Sequence[int]],
    base_prefix: Sequence[int] | None = None,
    base_points: Sequence[int] | None = None,
) -> Chain:
    """Deterministic Schreier-Sims.

    Base points are chosen as the first point (in ``base_prefix`` followed by
    0..n-1) moved by the element that forces a new level.  If ``base_points``
    is given, only those points may become base points; sifted residues that
    fix all of them are collected in ``chain.kernel`` instead (this computes
    the pointwise stabilizer of ``base_points`` as a by-product).
    """
    chain = Chain(degree)
    chain.point_order = list(base_points) if base_points is not None else _point_order(degree, base_prefix)
    gens = [tuple(g) for g in gens if not is_identity(g)]
    allowed = set(chain.point_order)
    moved = {p for g in gens for p in range(degree) if g[p] != p}
    for p in base_prefix or ():
        if p in moved and p in allowed:
            chain.levels.append(Level(p, degree))
    extend_chain(chain, gens)
    return _drop_trivial_levels(chain)


def extend_chain(chain: Chain, gens: Iterable[Sequence[int]]) -> bool:
    """Add generators to a complete chain and complete it again.

    Returns True if the group grew.  Checked Schreier pairs stay valid, so
    the work already done is reused.
    """
    levels = chain.levels
    grew = False
    top = len(levels) - 1
    for g in gens:
        g = tuple(g)
        h, k = chain.sift(g)
        if is_identity(h):
            continue
        if k == len(levels):
            p = _first_moved(h, chain.point_order)
            if p is None:
                chain.kernel.append(h)
                for m in range(0, k):
                    levels[m].add_gen(h)
                grew = True
                top = max(top, k - 1)
                continue
            _new_level(chain, p)
        for m in range(0, k + 1):
            levels[m].add_gen(h)
        grew = True
        top = max(top, k)
    _complete(chain, top)
    return grew


def _complete(chain: Chain, top: int) -> None:
    levels = chain.levels
    i = min(top, len(levels) - 1)
    while i >= 0:
        lv = levels[i]
        jumped = False
        for p in list(lv.orbit):
            for j in range(len(lv.gens)):
                if (p, j) in lv.checked:
                    continue
                lv.checked.add((p, j))
                g = lv.gens[j]
                q = g[p]
                s = mul(mul(lv.transversal(p), g), lv.transversal_inv(q))
                if is_identity(s):
                    continue
                h, k = chain.sift(s, i + 1)
                if is_identity(h):
                    continue
                if k == len(levels):
                    pt = _first_moved(h, chain.point_order)
                    if pt is None:
                        chain.kernel.append(h)
                        for m in range(i + 1, k):
                            levels[m].add_gen(h)
                        k = k - 1
                        if k <= i:
                            continue
                        i = k
                        jumped = True
                        break
                    _new_level(chain, pt)
                for m in range(i + 1, k + 1):
                    levels[m].add_gen(h)
                i = k
                jumped = True
                break
            if jumped:
                break
        if not jumped:
            i -= 1


def _new_level(chain: Chain, p: int) -> None:
    lv = Level(p, chain.degree)
    # kernel elements fix every admissible point, so they lie in every stabilizer
    for h in chain.kernel:
        lv.add_gen(h)
    chain.levels.append(lv)


def _drop_trivial_levels(chain: Chain) -> Chain:
    # A level whose orbit is a single point is redundant for sifting.
    chain.levels[:] = [lv for lv in chain.levels if len(lv.orbit) > 1]
    return chain


def chain_with_known_order(
    degree: int,
    source: Chain,
    base_prefix: Sequence[int] | None = None,
    seed: int = 0,
) -> Chain:
    """Rebuild a chain for the group of ``source`` with a new base ordering.

    Uniformly random elements of the source group are sifted into the new
    chain until its order reaches the known order.  The generator is seeded,
    so the result is reproducible.
    """
    target = source.order()
    order = _point_order(degree, base_prefix)
    chain = Chain(degree)
    chain.point_order = order
    levels = chain.levels
    rng = random.Random(seed)
    gens = source.strong_generators()
    moved = {p for g in gens for p in range(degree) if g[p] != p}
    for p in base_prefix or ():
        if p in moved:
            levels.append(Level(p, degree))
    pending = list(gens)
    while chain.order() < target:
        g = pending.pop() if pending else source.random_element(rng)
        h, k = chain.sift(g)
        if is_identity(h):
            continue
        if k == len(levels):
            levels.append(Level(_first_moved(h, order), degree))
        for m in range(0, k + 1):
            levels[m].add_gen(h)
    # Schreier pairs are left unchecked; extend_chain on this chain re-verifies them all.
    return _drop_trivial_levels(chain)
