"""Permutations of {0..n-1} stored as image tuples.

Products act on the right: ``(p * q)(i) == q(p(i))``, so conjugation is
``x ** g == g^-1 x g`` and the commutator is ``[x, y] = x^-1 y^-1 x y``.
The low-level helpers (``mul``, ``inv``, ...) accept any integer sequence
and return plain tuples; they are what the group algorithms use internally.
The text format (cycle notation) is 1-based.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence


class PermutationError(ValueError):
    pass


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Apply p, then q."""
    return tuple(map(q.__getitem__, p))


def inv(p: Sequence[int]) -> tuple[int, ...]:
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def conj(x: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """x^g = g^-1 x g."""
    # i -> g^-1(i) -> x -> g, i.e. images g[x[ginv[i]]]
    r = [0] * len(x)
    for i, xi in enumerate(x):
        r[g[i]] = g[xi]
    return tuple(r)


def comm(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return mul(mul(inv(x), inv(y)), mul(x, y))


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def power(p: Sequence[int], k: int) -> tuple[int, ...]:
    n = len(p)
    if k < 0:
        p, k = inv(p), -k
    result = identity(n)
    base = tuple(p)
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its least point."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def order(p: Sequence[int]) -> int:
    return math.lcm(1, *(len(c) for c in cycles(p)))


def support(p: Sequence[int]) -> list[int]:
    return [i for i, x in enumerate(p) if i != x]


def check_images(images: Sequence[int]) -> None:
    n = len(images)
    if n == 0:
        raise PermutationError("degree must be positive")
    if sorted(images) != list(range(n)):
        raise PermutationError(f"images {list(images)} do not form a bijection of 0..{n - 1}")


def format_cycles(p: Sequence[int]) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse 1-based disjoint-cycle notation such as ``(1 2 3)(4 5)``.

    Commas inside a cycle are accepted as separators.  Cycles are composed
    left to right, so non-disjoint input is still meaningful.
    """
    stripped = text.strip()
    if stripped in ("", "()", "1", "id", "e"):
        return identity(degree)
    rest = _CYCLE_RE.sub("", stripped)
    if rest.strip():
        raise PermutationError(f"unparseable cycle notation: {text!r}")
    result = identity(degree)
    for body in _CYCLE_RE.findall(stripped):
        pts = [int(tok) - 1 for tok in body.replace(",", " ").split()]
        if len(pts) < 2:
            continue
        if len(set(pts)) != len(pts):
            raise PermutationError(f"repeated point in cycle ({body})")
        if min(pts) < 0 or max(pts) >= degree:
            raise PermutationError(f"cycle ({body}) leaves 1..{degree}")
        img = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
        result = mul(result, img)
    return result


class Permutation(tuple):
    """An immutable permutation; a tuple of 0-based images."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        t = tuple.__new__(cls, images)
        check_images(t)
        return t

    @classmethod
    def _trusted(cls, images: Iterable[int]) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, text: str) -> "Permutation":
        return cls._trusted(parse_cycles(text, degree))

    @classmethod
    def from_cycle_list(cls, degree: int, cycle_list: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-based cycles."""
        img = list(range(degree))
        for c in cycle_list:
            for a, b in zip(c, list(c[1:]) + [c[0]]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i]

    def __mul__(self, other):
        return Permutation._trusted(mul(self, other))

    def __invert__(self):
        return Permutation._trusted(inv(self))

    def __pow__(self, k):
        if isinstance(k, int):
            return Permutation._trusted(power(self, k))
        return Permutation._trusted(conj(self, k))

    def inverse(self) -> "Permutation":
        return ~self

    def commutator(self, other) -> "Permutation":
        return Permutation._trusted(comm(self, other))

    def is_identity(self) -> bool:
        return is_identity(self)

    def order(self) -> int:
        return order(self)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def support(self) -> list[int]:
        return support(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)})"

    def __str__(self) -> str:
        return format_cycles(self)
