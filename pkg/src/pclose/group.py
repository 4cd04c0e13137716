"""Permutation groups on {0..n-1} backed by a stabilizer chain.

Groups are immutable; derived data (chain, orbits, series) is cached on
first use.  Equality is semantic: same degree, same order and mutual
containment.
"""

from __future__ import annotations

import math
import random
from functools import reduce
from typing import Callable, Iterable, Sequence

from . import config
from .bsgs import Chain, chain_with_known_order, extend_chain, schreier_sims
from .errors import PreconditionError, ResourceLimitError
from .perm import Permutation, comm, conj, is_identity, mul

PermLike = Sequence[int]


def _as_perm(g, degree: int) -> Permutation:
    if isinstance(g, str):
        return Permutation.from_cycles(degree, g)
    if isinstance(g, Permutation):
        p = g
    else:
        p = Permutation(g)
    if len(p) != degree:
        raise PreconditionError(f"permutation of degree {len(p)} in a group of degree {degree}")
    return p


class PermGroup:
    """A permutation group given by generators."""

    __slots__ = ("degree", "generators", "_chain", "_cache", "__weakref__")

    def __init__(self, degree: int, generators: Iterable = (), *, _chain: Chain | None = None):
        if degree < 1:
            raise PreconditionError("degree must be positive")
        self.degree = degree
        gens: list[Permutation] = []
        seen = set()
        for g in generators:
            p = _as_perm(g, degree)
            if not p.is_identity() and p not in seen:
                seen.add(p)
                gens.append(p)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._chain = _chain
        self._cache: dict = {}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree)

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n == 1:
            return cls(1)
        gens = [tuple(list(range(1, n)) + [0])]
        if n > 2:
            gens.append((1, 0) + tuple(range(2, n)))
        return cls(n, gens)

    @classmethod
    def alternating(cls, n: int) -> "PermGroup":
        if n < 3:
            return cls(n)
        gens = []
        for i in range(n - 2):
            img = list(range(n))
            img[i], img[i + 1], img[i + 2] = i + 1, i + 2, i
            gens.append(tuple(img))
        return cls(n, gens)

    @classmethod
    def cyclic(cls, n: int) -> "PermGroup":
        return cls(n, [tuple(list(range(1, n)) + [0])]) if n > 1 else cls(1)

    def _from_chain(self, chain: Chain) -> "PermGroup":
        return PermGroup(self.degree, chain.strong_generators(), _chain=chain)

    def subgroup(self, generators: Iterable) -> "PermGroup":
        """The subgroup generated by elements that must lie in self."""
        H = PermGroup(self.degree, generators)
        for g in H.generators:
            if not self.contains(g):
                raise PreconditionError(f"{g} is not an element of the group")
        return H

    # -- chain ------------------------------------------------------------------

    @property
    def chain(self) -> Chain:
        if self._chain is None:
            self._chain = schreier_sims(self.degree, self.generators)
        return self._chain

    def chain_with_base(self, prefix: Sequence[int]) -> Chain:
        """A chain whose base starts with the points of ``prefix`` moved by the group."""
        key = ("chain", tuple(prefix))
        c = self._cache.get(key)
        if c is None:
            c = chain_with_known_order(self.degree, self.chain, prefix)
            self._cache[key] = c
        return c

    @property
    def base(self) -> list[int]:
        return self.chain.base

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation._trusted(g) for g in self.chain.strong_generators()]

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [list(lv.orbit) for lv in self.chain.levels]

    def order(self) -> int:
        return self.chain.order()

    def __len__(self) -> int:
        return self.order()

    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, g: PermLike) -> bool:
        if len(g) != self.degree:
            raise PreconditionError("degree mismatch")
        return self.chain.contains(g)

    __contains__ = contains

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._trusted(self.chain.random_element(rng))

    def elements(self, bound: int | None = None) -> list[Permutation]:
        bound = config.enum_bound() if bound is None else bound
        if self.order() > bound:
            raise ResourceLimitError(f"refusing to list {self.order()} elements (bound {bound})")
        return [Permutation._trusted(g) for g in self.chain.elements()]

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    # -- comparisons ------------------------------------------------------------

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            return False
        return all(other.contains(g) for g in self.generators)

    def __le__(self, other: "PermGroup") -> bool:
        return self.is_subgroup_of(other)

    def __lt__(self, other: "PermGroup") -> bool:
        return self.is_subgroup_of(other) and self.order() < other.order()

    def __ge__(self, other: "PermGroup") -> bool:
        return other.is_subgroup_of(self)

    def __gt__(self, other: "PermGroup") -> bool:
        return other < self

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self is other:
            return True
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.order()))

    def key(self) -> tuple:
        """A canonical fingerprint: equal groups (same degree) have equal keys."""
        k = self._cache.get("key")
        if k is None:
            k = (self.order(), _canonical_generators(self))
            self._cache["key"] = k
        return k

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, order={self.order()}, gens=[{gens}])"

    # -- orbits and stabilizers -------------------------------------------------

    def orbit(self, p: int) -> list[int]:
        out = [p]
        seen = {p}
        i = 0
        while i < len(out):
            q = out[i]
            for g in self.generators:
                r = g[q]
                if r not in seen:
                    seen.add(r)
                    out.append(r)
            i += 1
        return out

    def orbits(self) -> list[list[int]]:
        res = self._cache.get("orbits")
        if res is None:
            seen = set()
            res = []
            for p in range(self.degree):
                if p not in seen:
                    o = sorted(self.orbit(p))
                    seen.update(o)
                    res.append(o)
            self._cache["orbits"] = res
        return [list(o) for o in res]

    def moved_points(self) -> list[int]:
        return sorted({p for g in self.generators for p in range(self.degree) if g[p] != p})

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        pts = list(dict.fromkeys(points))
        if not pts or self.is_trivial():
            return self
        c = self.chain_with_base(pts)
        pset = set(pts)
        j = 0
        while j < len(c.levels) and c.levels[j].point in pset:
            j += 1
        sub = Chain(self.degree, c.levels[j:])
        if not sub.levels:
            return PermGroup(self.degree)
        return PermGroup(self.degree, sub.strong_generators(), _chain=sub)

    def stabilizer(self, p: int) -> "PermGroup":
        return self.pointwise_stabilizer([p])

    def restriction(self, points: Sequence[int]) -> tuple["PermGroup", "Homomorphism"]:
        """Action on a union of orbits, relabelled 0..len(points)-1 in the given order."""
        pts = list(points)
        index = {p: i for i, p in enumerate(pts)}
        for g in self.generators:
            for p in pts:
                if g[p] not in index:
                    raise PreconditionError("points are not a union of orbits")

        def act(g: PermLike) -> tuple[int, ...]:
            return tuple(index[g[p]] for p in pts)

        img = PermGroup(len(pts), [act(g) for g in self.generators])
        return img, Homomorphism(self, img, [img_g for img_g in (act(g) for g in self.generators)], func=act)

    # -- generation ---------------------------------------------------------------

    def join(self, *others) -> "PermGroup":
        gens = list(self.generators)
        for o in others:
            if isinstance(o, PermGroup):
                gens.extend(o.generators)
            else:
                gens.append(_as_perm(o, self.degree))
        return PermGroup(self.degree, gens)

    def conjugate(self, g: PermLike) -> "PermGroup":
        return PermGroup(self.degree, [conj(h, g) for h in self.generators])

    def normal_closure(self, S) -> "PermGroup":
        """Smallest normal subgroup of self containing S (a group or elements)."""
        if isinstance(S, PermGroup):
            sgens = list(S.generators)
        else:
            sgens = [_as_perm(s, self.degree) for s in S]
        for s in sgens:
            if not self.contains(s):
                raise PreconditionError("normal_closure: S is not contained in G")
        return _normal_closure(self.degree, sgens, self.generators)

    def is_normal(self, H: "PermGroup") -> bool:
        """H normal in self (H must be a subgroup)."""
        if not H.is_subgroup_of(self):
            return False
        return all(H.contains(conj(h, g)) for h in H.generators for g in self.generators)

    def normalizes(self, H: "PermGroup") -> bool:
        """Every generator of self normalizes H (no containment required)."""
        return all(H.contains(conj(h, g)) for h in H.generators for g in self.generators)

    def commutator(self, H: "PermGroup", K: "PermGroup") -> "PermGroup":
        """[H, K] for subgroups H, K of a common group."""
        gens = [comm(h, k) for h in H.generators for k in K.generators]
        gens = [g for g in gens if not is_identity(g)]
        if not gens:
            return PermGroup(self.degree)
        return _normal_closure(self.degree, gens, list(H.generators) + list(K.generators))

    def derived_subgroup(self) -> "PermGroup":
        d = self._cache.get("derived")
        if d is None:
            d = self.commutator(self, self)
            self._cache["derived"] = d
        return d

    def derived_series(self) -> list["PermGroup"]:
        s = [self]
        while True:
            d = s[-1].derived_subgroup()
            if d.order() == s[-1].order():
                return s
            s.append(d)

    def lower_central_series(self) -> list["PermGroup"]:
        s = [self]
        while True:
            d = self.commutator(s[-1], self)
            if d.order() == s[-1].order():
                return s
            s.append(d)

    def perfect_core(self) -> "PermGroup":
        return self.derived_series()[-1]

    def series(self, kind: str) -> list["PermGroup"]:
        if kind == "derived":
            return self.derived_series()
        if kind == "lower_central":
            return self.lower_central_series()
        if kind == "perfect_core":
            return [self.perfect_core()]
        raise PreconditionError(f"unknown series kind {kind!r}")

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gs) for b in gs[i + 1:])

    def is_perfect(self) -> bool:
        return self.derived_subgroup().order() == self.order()

    def is_solvable(self) -> bool:
        v = self._cache.get("solvable")
        if v is None:
            v = self.perfect_core().is_trivial()
            self._cache["solvable"] = v
        return v

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].is_trivial()

    def is_subnormal(self, K: "PermGroup") -> bool:
        return self.subnormal_chain(K) is not None

    def subnormal_chain(self, K: "PermGroup") -> list["PermGroup"] | None:
        """G = H_0 > H_1 > ... > K with H_{i+1} = <K^{H_i}>, or None if K is not subnormal."""
        if not K.is_subgroup_of(self):
            raise PreconditionError("is_subnormal: K is not contained in G")
        chain = [self]
        while chain[-1].order() != K.order():
            nxt = chain[-1].normal_closure(K)
            if nxt.order() == chain[-1].order():
                return None
            chain.append(nxt)
        return chain

    # -- searches (delegated) -------------------------------------------------------

    def centralizer(self, target) -> "PermGroup":
        from .search import centralizer

        return centralizer(self, target)

    def center(self) -> "PermGroup":
        z = self._cache.get("center")
        if z is None:
            z = self.centralizer(self)
            self._cache["center"] = z
        return z

    def normalizer(self, H: "PermGroup") -> "PermGroup":
        from .search import normalizer

        return normalizer(self, H)

    def intersection(self, H: "PermGroup") -> "PermGroup":
        from .search import intersection

        return intersection(self, H)

    # -- quotients -------------------------------------------------------------------

    def quotient(self, N: "PermGroup") -> tuple["PermGroup", "Homomorphism"]:
        from .quotient import quotient

        return quotient(self, N)

    def index(self, H: "PermGroup") -> int:
        return self.order() // H.order()


def _normal_closure(degree: int, sgens: Sequence[PermLike], ggens: Sequence[PermLike]) -> PermGroup:
    sgens = [tuple(s) for s in sgens if not is_identity(s)]
    if not sgens:
        return PermGroup(degree)
    # keep only generators that enlarge the group, so results stay small
    chain = schreier_sims(degree, sgens[:1])
    gens = sgens[:1]
    for s in sgens[1:]:
        if not chain.contains(s):
            extend_chain(chain, [s])
            gens.append(s)
    ggens = list(dict.fromkeys(tuple(g) for g in ggens))
    i = 0
    # every generator of N gets conjugated by every generator of G once
    while i < len(gens):
        n = gens[i]
        new = []
        for g in ggens:
            c = conj(n, g)
            if not chain.contains(c):
                new.append(c)
                extend_chain(chain, [c])
        gens.extend(new)
        i += 1
    return PermGroup(degree, gens, _chain=chain)


def _canonical_generators(G: PermGroup) -> tuple:
    """For the base of first moved points, the base-image-minimal element of
    each coset G^(i+1) u, for every transversal u of every level."""
    if G.is_trivial():
        return ()
    c = G.chain_with_base(range(G.degree))
    out = []
    for i, lv in enumerate(c.levels):
        for p in sorted(lv.orbit):
            if p == lv.point:
                continue
            y = lv.transversal(p)
            for lw in c.levels[i + 1:]:
                d = min(lw.orbit, key=y.__getitem__)
                y = mul(lw.transversal(d), y)
            out.append(y)
    return tuple(out)


class Homomorphism:
    """A homomorphism given by generator images.

    If ``func`` is supplied it computes images directly (action maps);
    otherwise images are computed through the graph of the map.
    """

    def __init__(
        self,
        source: PermGroup,
        target: PermGroup,
        generator_images: Sequence[PermLike],
        func: Callable[[PermLike], tuple[int, ...]] | None = None,
    ):
        if len(generator_images) != len(source.generators):
            raise PreconditionError("one image per source generator is required")
        self.source = source
        self.target = target
        self.generator_images = tuple(Permutation._trusted(tuple(x)) for x in generator_images)
        self._func = func
        self._lift_chain: Chain | None = None
        self._image_chain: Chain | None = None

    def _graph_gens(self) -> list[tuple[int, ...]]:
        n = self.source.degree
        out = []
        for g, h in zip(self.source.generators, self.generator_images):
            out.append(tuple(g) + tuple(n + x for x in h))
        return out

    def __call__(self, g: PermLike) -> Permutation:
        if self._func is not None:
            return Permutation._trusted(self._func(g))
        n = self.source.degree
        if self._image_chain is None:
            self._image_chain = schreier_sims(n + self.target.degree, self._graph_gens(), base_points=range(n))
            if self._image_chain.kernel:
                raise PreconditionError("generator images do not define a homomorphism")
        c = self._image_chain
        d = c.element_from_base_images([g[b] for b in c.base])
        if d is None or tuple(d[:n]) != tuple(g):
            raise PreconditionError("element is not in the source group")
        return Permutation._trusted(tuple(x - n for x in d[n:]))

    def _lifter(self) -> Chain:
        if self._lift_chain is None:
            n = self.source.degree
            m = self.target.degree
            self._lift_chain = schreier_sims(n + m, self._graph_gens(), base_points=range(n, n + m))
        return self._lift_chain

    def lift(self, y: PermLike) -> Permutation:
        """Some preimage of y (which must lie in the image)."""
        n = self.source.degree
        c = self._lifter()
        d = c.element_from_base_images([n + y[b - n] for b in c.base])
        if d is None or tuple(x - n for x in d[n:]) != tuple(y):
            raise PreconditionError("element is not in the image")
        return Permutation._trusted(d[:n])

    def image(self, H: PermGroup | None = None) -> PermGroup:
        if H is None:
            return PermGroup(self.target.degree, self.generator_images)
        return PermGroup(self.target.degree, [self(h) for h in H.generators])

    def kernel(self) -> PermGroup:
        n = self.source.degree
        c = self._lifter()
        gens = [k[:n] for k in c.kernel]
        return self.source.normal_closure(gens) if gens else PermGroup(n)

    def preimage(self, H: PermGroup, kernel: PermGroup | None = None) -> PermGroup:
        kernel = self.kernel() if kernel is None else kernel
        return PermGroup(self.source.degree, list(kernel.generators) + [self.lift(h) for h in H.generators])

    def verify(self, samples: int = 100, seed: int = 0) -> bool:
        """phi(xy) == phi(x)phi(y) on random pairs."""
        rng = random.Random(seed)
        for _ in range(samples):
            x = self.source.random_element(rng)
            y = self.source.random_element(rng)
            if self(mul(x, y)) != mul(self(x), self(y)):
                return False
        return True


def direct_product(*groups: PermGroup) -> PermGroup:
    """External direct product on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            img = list(range(degree))
            for i, x in enumerate(g):
                img[offset + i] = offset + x
            gens.append(tuple(img))
        offset += G.degree
    return PermGroup(degree, gens)


def orbit_factors(G: PermGroup) -> list[tuple[list[int], PermGroup]]:
    """Split G as an internal direct product along unions of its orbits.

    Returns (block, factor) pairs, where factor is the pointwise stabilizer of
    the complement of block.  Orbits whose factor already has the full
    restricted order are separate blocks; the rest are merged into one block.
    The product of factor orders always equals |G|.
    """
    orbs = [o for o in G.orbits() if len(o) > 1]
    if len(orbs) <= 1:
        return [(sorted(p for o in orbs for p in o), G)] if orbs else []
    singles = []
    rest = []
    allpts = set(G.moved_points())
    for o in orbs:
        complement = sorted(allpts - set(o))
        K = G.pointwise_stabilizer(complement)
        R, _ = G.restriction(o)
        if K.order() == R.order():
            singles.append((o, K))
        else:
            rest.append(o)
    out = list(singles)
    if rest:
        block = sorted(p for o in rest for p in o)
        K = G.pointwise_stabilizer(sorted(allpts - set(block)))
        out.append((block, K))
    if math.prod(K.order() for _, K in out) != G.order():
        return [(sorted(allpts), G)]
    return out


def product_order(groups: Iterable[PermGroup]) -> int:
    return reduce(lambda a, b: a * b, (g.order() for g in groups), 1)
