"""Explicit element tables for small groups, used by the brute-force oracles.

Elements are indexed once; subgroups become boolean masks over the index
set.  Products are looked up through integer codes of base images, so all
table operations are vectorized with numpy.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import ResourceLimitError
from .group import PermGroup
from .perm import Permutation, inv

Perm = tuple[int, ...]


class Enumerated:
    def __init__(self, G: PermGroup, bound: int | None = None):
        bound = config.oracle_bound() if bound is None else bound
        if G.order() > bound:
            raise ResourceLimitError(f"group of order {G.order()} exceeds the oracle bound {bound}")
        self.group = G
        self.n = G.degree
        elems = sorted(G.chain.elements())
        self.elements: list[Perm] = elems
        self.size = len(elems)
        self.E = np.array(elems, dtype=np.int32).reshape(self.size, self.n)
        self.base = list(G.base) or [0]
        self._radix = np.array([self.n ** k for k in range(len(self.base))], dtype=np.int64)
        codes = self._codes(self.E[:, self.base])
        self._order = np.argsort(codes)
        self._sorted_codes = codes[self._order]
        self._index = {e: i for i, e in enumerate(elems)}
        self._cols: dict[int, np.ndarray] = {}
        self.identity_index = self._index[tuple(range(self.n))]

    def _codes(self, images: np.ndarray) -> np.ndarray:
        return (images.astype(np.int64) * self._radix).sum(axis=1)

    def _lookup(self, images: np.ndarray) -> np.ndarray:
        codes = self._codes(images)
        pos = np.searchsorted(self._sorted_codes, codes)
        return self._order[pos]

    def index(self, g: Sequence[int]) -> int:
        return self._index[tuple(g)]

    def right_mult(self, j: int) -> np.ndarray:
        """Column c with elements[c[i]] == elements[i] * elements[j]."""
        col = self._cols.get(j)
        if col is None:
            x = self.E[j]
            col = self._lookup(x[self.E[:, self.base]])
            self._cols[j] = col
        return col

    def conj_map(self, s: Sequence[int]) -> np.ndarray:
        """Index map of x -> s^-1 x s (s must normalize the group)."""
        s = np.asarray(s, dtype=np.int32)
        sinv = np.asarray(inv(tuple(int(v) for v in s)), dtype=np.int32)
        # (s^-1 x s)[b] = s[x[sinv[b]]]
        imgs = s[self.E[:, sinv[self.base]]]
        return self._lookup(imgs)

    def closure(self, gens: Iterable[int], start: np.ndarray | None = None) -> np.ndarray:
        gens = [g for g in gens if g != self.identity_index]
        mask = np.zeros(self.size, dtype=bool) if start is None else start.copy()
        mask[self.identity_index] = True
        if not gens:
            return mask
        cols = [self.right_mult(g) for g in gens]
        frontier = np.nonzero(mask)[0]
        while frontier.size:
            nxt = np.concatenate([c[frontier] for c in cols])
            nxt = np.unique(nxt)
            nxt = nxt[~mask[nxt]]
            mask[nxt] = True
            frontier = nxt
        return mask

    def mask_of(self, H: PermGroup) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        for g in H.chain.elements():
            mask[self._index[g]] = True
        return mask

    def generators_of(self, mask: np.ndarray) -> list[int]:
        """A small generating set of the subgroup given by mask."""
        members = np.nonzero(mask)[0]
        gens: list[int] = []
        cur = self.closure([])
        # prefer elements of large order so few generators are needed
        for i in members[np.argsort(-self.element_orders()[members], kind="stable")]:
            if not cur[i]:
                gens.append(int(i))
                cur = self.closure(gens)
                if cur.sum() == mask.sum():
                    break
        return gens

    def group_of(self, mask: np.ndarray) -> PermGroup:
        return PermGroup(self.n, [self.elements[i] for i in self.generators_of(mask)])

    def element_orders(self) -> np.ndarray:
        orders = getattr(self, "_orders", None)
        if orders is None:
            orders = np.array([Permutation._trusted(e).order() for e in self.elements], dtype=np.int64)
            self._orders = orders
        return orders

    # -- lattices -----------------------------------------------------------------

    def cyclic_masks(self) -> list[np.ndarray]:
        seen = {}
        for i in range(self.size):
            m = self.closure([i])
            seen.setdefault(m.tobytes(), m)
        return list(seen.values())

    def invariant_atoms(self, acting: Sequence[Sequence[int]]) -> list[np.ndarray]:
        """<x^S> for every x, where S is generated by `acting` (conjugation)."""
        maps = [self.conj_map(s) for s in acting]
        seen = {}
        done = np.zeros(self.size, dtype=bool)
        for i in range(self.size):
            if done[i]:
                continue
            orbit = {i}
            stack = [i]
            while stack:
                y = stack.pop()
                for m in maps:
                    z = int(m[y])
                    if z not in orbit:
                        orbit.add(z)
                        stack.append(z)
            done[list(orbit)] = True
            mask = self.closure(sorted(orbit))
            seen.setdefault(mask.tobytes(), mask)
        return list(seen.values())

    def join_closure(self, atoms: Sequence[np.ndarray], limit: int | None = None) -> list[np.ndarray]:
        """All joins of subsets of atoms (including the trivial subgroup)."""
        triv = self.closure([])
        found = {triv.tobytes(): triv}
        queue = [triv]
        atoms = [a for a in atoms]
        agens = [self.generators_of(a) for a in atoms]
        i = 0
        while i < len(queue):
            H = queue[i]
            i += 1
            hgens = None
            for a, ag in zip(atoms, agens):
                if not (a & ~H).any():
                    continue
                if hgens is None:
                    hgens = self.generators_of(H)
                J = self.closure(hgens + ag)
                k = J.tobytes()
                if k not in found:
                    found[k] = J
                    queue.append(J)
                    if limit is not None and len(found) > limit:
                        raise ResourceLimitError("lattice enumeration exceeded its limit")
        return sorted(found.values(), key=lambda m: (int(m.sum()), m.tobytes()))

    def all_subgroups(self) -> list[np.ndarray]:
        return self.join_closure(self.cyclic_masks())

    def normal_subgroups(self) -> list[np.ndarray]:
        return self.join_closure(self.invariant_atoms(self.group.generators))

    def invariant_subgroups(self, acting: Sequence[Sequence[int]]) -> list[np.ndarray]:
        return self.join_closure(self.invariant_atoms(acting))
