"""Group actions realized inside an explicit wrapper group W = G A."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import PreconditionError
from .group import PermGroup
from .perm import Permutation, conj, identity, is_identity, mul, power


@dataclass(eq=False)
class CoprimeAction:
    """W = G A with G normal in W, A an elementary abelian r-group meeting G
    trivially, acting on G by conjugation.

    ``actor_basis`` is a basis of A; elements of A are indexed by exponent
    vectors over it.  ``coprime`` records gcd(|A|, |G|) = 1; constructing a
    non-coprime action requires ``require_coprime=False`` and is meant for
    operations that do not assume coprimality (A-components).
    """

    wrapper: PermGroup
    group: PermGroup
    actors: PermGroup
    prime: int
    actor_basis: tuple[Permutation, ...] = ()
    name: str = ""
    coprime: bool = field(init=False, default=True)

    def __post_init__(self):
        self.validate(require_coprime=True)

    @classmethod
    def build(
        cls,
        group: PermGroup,
        actor_basis,
        prime: int,
        name: str = "",
        require_coprime: bool = True,
    ) -> "CoprimeAction":
        basis = tuple(Permutation(a) for a in actor_basis if not is_identity(a))
        A = PermGroup(group.degree, basis)
        W = PermGroup(group.degree, list(group.generators) + list(basis))
        obj = cls.__new__(cls)
        obj.wrapper, obj.group, obj.actors, obj.prime = W, group, A, prime
        obj.actor_basis, obj.name = basis, name
        obj.coprime = True
        obj.validate(require_coprime=require_coprime)
        return obj

    def validate(self, require_coprime: bool = True) -> None:
        W, G, A, r = self.wrapper, self.group, self.actors, self.prime
        if not (G.degree == A.degree == W.degree):
            raise PreconditionError("wrapper, group and actors must share a degree")
        if not self.actor_basis:
            self.actor_basis = tuple(A.generators)
        if any(not W.contains(a) for a in self.actor_basis) or not G.is_subgroup_of(W):
            raise PreconditionError("G and A must lie in the wrapper")
        if not all(G.contains(conj(g, a)) for g in G.generators for a in self.actor_basis):
            raise PreconditionError("A does not normalize G")
        if not A.is_abelian() or any(not is_identity(power(a, r)) for a in self.actor_basis):
            raise PreconditionError(f"A is not elementary abelian of exponent {r}")
        if A.order() != r ** len(self.actor_basis):
            raise PreconditionError("actor generators are not a basis of A")
        if W.order() != G.order() * A.order():
            raise PreconditionError("W is not G A with A meeting G trivially")
        self.coprime = math.gcd(A.order(), G.order()) == 1
        if require_coprime and not self.coprime:
            raise PreconditionError("|A| and |G| are not coprime")

    # -- elements of A ----------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.actor_basis)

    def element(self, exps) -> Permutation:
        g = identity(self.group.degree)
        for a, e in zip(self.actor_basis, exps):
            if e % self.prime:
                g = mul(g, power(a, e % self.prime))
        return Permutation._trusted(g)

    @cached_property
    def nonidentity_vectors(self) -> list[tuple[int, ...]]:
        r = self.prime
        return [v for v in itertools.product(range(r), repeat=self.rank) if any(v)]

    @cached_property
    def cyclic_vectors(self) -> list[tuple[int, ...]]:
        """One normalized exponent vector (first nonzero entry 1) per subgroup of order r."""
        out = []
        for v in self.nonidentity_vectors:
            first = next(x for x in v if x)
            if first == 1:
                out.append(v)
        return out

    def normalize_vector(self, v) -> tuple[int, ...]:
        r = self.prime
        v = tuple(x % r for x in v)
        first = next(x for x in v if x)
        inv = pow(first, -1, r)
        return tuple((x * inv) % r for x in v)

    def hyperplanes(self) -> list[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
        """Index-r subgroups of A as (normal vector, spanning exponent vectors).

        A hyperplane is the kernel of a nonzero linear functional; it is
        returned with a basis of exponent vectors.
        """
        r = self.prime
        k = self.rank
        out = []
        for f in self.cyclic_vectors:
            members = [v for v in itertools.product(range(r), repeat=k) if sum(a * b for a, b in zip(f, v)) % r == 0]
            out.append((f, _basis_of(members, r, k)))
        return out

    def subgroup_of_vectors(self, vecs) -> PermGroup:
        return PermGroup(self.group.degree, [self.element(v) for v in vecs])

    def describe(self) -> str:
        return self.name or f"action of order {self.actors.order()} on a group of order {self.group.order()}"


def _basis_of(members, r: int, k: int) -> list[tuple[int, ...]]:
    """Row-reduce a list of vectors over F_r to a basis of their span."""
    basis: list[list[int]] = []
    pivots: list[int] = []
    for v in members:
        w = list(v)
        for b, p in zip(basis, pivots):
            if w[p]:
                c = w[p]
                w = [(x - c * y) % r for x, y in zip(w, b)]
        if any(w):
            p = next(i for i, x in enumerate(w) if x)
            inv = pow(w[p], -1, r)
            w = [(x * inv) % r for x in w]
            # keep the basis reduced
            for idx, b in enumerate(basis):
                if b[p]:
                    c = b[p]
                    basis[idx] = [(x - c * y) % r for x, y in zip(b, w)]
            basis.append(w)
            pivots.append(p)
    return [tuple(b) for b in basis]
