"""Builders: GF(2^k), PSL(2, 2^k) on the projective line, direct powers with
coordinate-permuting or diagonal actions, and small matrix-group models."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .actions import CoprimeAction
from .errors import PreconditionError
from .group import PermGroup
from .perm import Permutation, identity, mul

# Fixed irreducible (primitive) polynomials, bit i = coefficient of x^i.
CONWAY_POLYNOMIALS = {
    1: 0b11,  # x + 1
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1011011,  # x^6 + x^4 + x^3 + x + 1
    7: 0b10000011,  # x^7 + x + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
}


class GF2k:
    """The field with 2^k elements; elements are ints whose bits are
    polynomial coefficients modulo the fixed polynomial."""

    def __init__(self, k: int):
        if k not in CONWAY_POLYNOMIALS:
            raise PreconditionError(f"GF(2^{k}) is only provided for 1 <= k <= 8")
        self.k = k
        self.q = 1 << k
        self.poly = CONWAY_POLYNOMIALS[k]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & self.q:
                a ^= self.poly
        return r

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    @cached_property
    def generator(self) -> int:
        """A primitive element (x itself when the polynomial is primitive)."""
        for g in range(2, self.q) if self.q > 2 else [1]:
            if self._multiplicative_order(g) == self.q - 1:
                return g
        return 1

    def _multiplicative_order(self, a: int) -> int:
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def elements(self) -> range:
        return range(self.q)


def build_psl2(k: int) -> tuple[PermGroup, Permutation]:
    """PSL(2, 2^k) on the projective line and the Frobenius permutation.

    Points 0..q-1 are the field elements and q is the point at infinity.
    Generators: x -> x + 1, x -> w x (w primitive), x -> 1/x.
    """
    if not 1 <= k <= 8:
        raise PreconditionError("build_psl2 requires 1 <= k <= 8")
    F = GF2k(k)
    q = F.q
    inf = q
    w = F.generator
    translate = [x ^ 1 for x in range(q)] + [inf]
    scale = [F.mul(w, x) for x in range(q)] + [inf]
    invert = [inf] + [F.inv(x) for x in range(1, q)] + [0]
    frob = [F.frobenius(x) for x in range(q)] + [inf]
    G = PermGroup(q + 1, [translate, scale, invert])
    return G, Permutation(frob)


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // (1 if q % 2 == 0 else 2)


def build_sl25() -> PermGroup:
    """SL(2,5) acting on the 24 nonzero vectors of F_5^2."""
    vecs = [(a, b) for a in range(5) for b in range(5) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def perm(m):
        (a, b), (c, d) = m
        # row vector v -> v m
        return [index[((x * a + y * c) % 5, (x * b + y * d) % 5)] for x, y in vecs]

    return PermGroup(24, [perm(((1, 1), (0, 1))), perm(((0, 1), (4, 0)))])


def build_sl23() -> PermGroup:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def perm(m):
        (a, b), (c, d) = m
        return [index[((x * a + y * c) % 3, (x * b + y * d) % 3)] for x, y in vecs]

    return PermGroup(8, [perm(((1, 1), (0, 1))), perm(((0, 1), (2, 0)))])


# -- direct powers -------------------------------------------------------------------


def _embed(g, offset: int, degree: int) -> tuple[int, ...]:
    img = list(range(degree))
    for i, x in enumerate(g):
        img[offset + i] = offset + x
    return tuple(img)


def power_group(J: PermGroup, m: int) -> PermGroup:
    """J^m on m consecutive blocks of J.degree points."""
    d = J.degree
    n = d * m
    return PermGroup(n, [_embed(g, i * d, n) for i in range(m) for g in J.generators])


def block_shift(d: int, m: int, step: int = 1) -> Permutation:
    """Permutation sending block i to block i + step (mod m), pointwise aligned."""
    n = d * m
    return Permutation([((i // d + step) % m) * d + (i % d) for i in range(n)])


def coordinate_translation(d: int, r: int, k: int, axis: int) -> Permutation:
    """Blocks indexed by F_r^k; translation by the axis-th basis vector."""
    coords = list(itertools.product(range(r), repeat=k))
    index = {c: i for i, c in enumerate(coords)}
    img = []
    for c in coords:
        c2 = list(c)
        c2[axis] = (c2[axis] + 1) % r
        j = index[tuple(c2)]
        img.extend(j * d + t for t in range(d))
    return Permutation(img)


def diagonal_automorphism(alpha, m: int, blocks=None) -> Permutation:
    """alpha applied inside each of the chosen blocks (all blocks by default)."""
    d = len(alpha)
    n = d * m
    img = list(range(n))
    for b in range(m) if blocks is None else blocks:
        for t in range(d):
            img[b * d + t] = b * d + alpha[t]
    return Permutation(img)


def build_power_action(
    J: PermGroup,
    pattern: str,
    *,
    prime: int,
    m: int | None = None,
    rank: int = 1,
    alpha=None,
    name: str = "",
) -> CoprimeAction:
    """G = J^m with an elementary abelian prime-order action.

    pattern:
      regular       A = C_r^rank permutes m = r^rank coordinates regularly
      diagonal      A = <alpha> acts as alpha on every one of m coordinates
      coordinatewise A = C_r^m, the i-th generator acts as alpha on coordinate i
      mixed         A = C_r x C_r: one generator shifts r coordinates cyclically,
                    the other applies alpha diagonally
    """
    d = J.degree
    if pattern == "regular":
        m = prime**rank
        G = power_group(J, m)
        basis = [coordinate_translation(d, prime, rank, i) for i in range(rank)]
    elif pattern == "diagonal":
        if alpha is None or m is None:
            raise PreconditionError("diagonal pattern needs alpha and m")
        G = power_group(J, m)
        basis = [diagonal_automorphism(alpha, m)]
    elif pattern == "coordinatewise":
        if alpha is None or m is None:
            raise PreconditionError("coordinatewise pattern needs alpha and m")
        G = power_group(J, m)
        basis = [diagonal_automorphism(alpha, m, [i]) for i in range(m)]
    elif pattern == "mixed":
        if alpha is None:
            raise PreconditionError("mixed pattern needs alpha")
        m = prime
        G = power_group(J, m)
        basis = [block_shift(d, m), diagonal_automorphism(alpha, m)]
    else:
        raise PreconditionError(f"unknown pattern {pattern!r}")
    if alpha is not None and not PermGroup(d, [alpha]).normalizes(J):
        raise PreconditionError("alpha must normalize J")
    return CoprimeAction.build(G, basis, prime, name=name or f"{pattern} power of order-{J.order()} group, m={m}")


def trivial_action(G: PermGroup, prime: int, name: str = "") -> CoprimeAction:
    """A = C_r acting trivially: realized on r extra points as an r-cycle."""
    n = G.degree
    gens = [tuple(g) + tuple(range(n, n + prime)) for g in G.generators]
    Gx = PermGroup(n + prime, gens)
    a = list(range(n)) + [n + (i + 1) % prime for i in range(prime)]
    return CoprimeAction.build(Gx, [a], prime, name=name, require_coprime=False)


# -- the closing example: PSL(2, 2^r) with a Frobenius twist ----------------------------


@dataclass
class LgExampleInstance:
    r: int
    J: PermGroup | None
    a1: Permutation | None
    K_label: str
    n: int
    structural: bool = True

    @property
    def q(self) -> int:
        return 2**self.r


def build_lg_example(r: int, k_label: str = "A5") -> LgExampleInstance:
    from .simple import label_order

    if r not in (5, 7):
        raise PreconditionError("the example is provided for r in {5, 7}")
    n = label_order(k_label)
    if n is None:
        raise PreconditionError(f"unknown simple group label {k_label!r}")
    J, a1 = build_psl2(r)
    return LgExampleInstance(r=r, J=J, a1=a1, K_label=k_label, n=n)


def identity_perm(n: int) -> Permutation:
    return Permutation._trusted(identity(n))


def compose(*ps) -> Permutation:
    out = identity(len(ps[0]))
    for p in ps:
        out = mul(out, p)
    return Permutation._trusted(out)


def _regular_action(K: PermGroup) -> tuple[list, list[Permutation]]:
    """Elements of K and the right-regular permutations of its generators."""
    elems = sorted(K.elements())
    index = {e: i for i, e in enumerate(elems)}
    gens = [Permutation([index[mul(e, g)] for e in elems]) for g in K.generators]
    return elems, gens


def _simple_group(label: str) -> PermGroup | None:
    if label == "A5":
        return PermGroup.alternating(5)
    if label == "L2(7)":
        inf = 7
        t = [(x + 1) % 7 for x in range(7)] + [inf]
        s = [(2 * x) % 7 for x in range(7)] + [inf]
        u = [inf] + [(-pow(x, -1, 7)) % 7 for x in range(1, 7)] + [0]
        return PermGroup(8, [t, s, u])
    return None


def _wreath_regular(H: PermGroup, K: PermGroup) -> tuple[PermGroup, PermGroup, PermGroup]:
    """H wr K with K acting regularly on |K| copies of H.

    Returns (W, base, top) with base = H^|K| and top the complement K."""
    _, kgens = _regular_action(K)
    n = len(kgens[0]) if kgens else 1
    d = H.degree
    top = [Permutation([g[i // d] * d + i % d for i in range(n * d)]) for g in kgens]
    first = [_embed(h, 0, n * d) for h in H.generators]
    W = PermGroup(n * d, first + top)
    base = W.normal_closure(first)
    return W, base, PermGroup(n * d, top)


def verify_lg_example(inst: LgExampleInstance) -> dict:
    """Check the claims of the closing example, separately.

    (i) and (ii) are computed in J.  (iii) is computed on the surrogate
    with K = C3 permuting three copies of J.  (iv) is computed on
    C_J(a1) wr K with K acting regularly.  (v) is structural: J is simple
    and normalized by a1, and the complement K meets J^n trivially."""
    import math

    from .components import comp_p
    from .properties import get_property

    sol = get_property("solvable")
    J, a1, r, n = inst.J, inst.a1, inst.r, inst.n
    claims = []
    notes = []

    C = J.centralizer(PermGroup(J.degree, [a1]))
    claims.append(
        {
            "claim": "(i) C_J(a1) is solvable",
            "status": "pass" if C.is_solvable() else "fail",
            "method": "computed",
            "order": C.order(),
        }
    )
    coprime = math.gcd(r, J.order()) == 1 and J.order() % r != 0
    claims.append(
        {
            "claim": "(ii) J is an r'-group",
            "status": "pass" if coprime else "fail",
            "method": "computed",
            "gcd": math.gcd(r, J.order()),
        }
    )
    if n % r == 0:
        notes.append(f"|K| = {n} is divisible by r = {r}, so A does not act coprimely on G")

    if inst.r == 5:
        # (iii) on G = J^3 : C3 with a acting as a1 on every coordinate
        m = 3
        act = build_power_action(J, "diagonal", prime=r, m=m, alpha=a1)
        shift = block_shift(J.degree, m)
        G3 = PermGroup(J.degree * m, list(act.group.generators) + [shift])
        a = act.actor_basis[0]
        CG = G3.centralizer(PermGroup(G3.degree, [a]))
        expected = power_group(C, m).join(PermGroup(G3.degree, [shift]))
        ok = CG == expected and CG.order() == C.order() ** m * m
        claims.append(
            {
                "claim": "(iii) C_G(a) = (C_J1(a1) x ... x C_Jn(an)) K",
                "status": "pass" if ok else "fail",
                "method": "computed on K = C3",
                "order": CG.order(),
            }
        )
        K = _simple_group(inst.K_label)
        if K is not None:
            fixed = sorted(p for p in range(J.degree) if a1[p] == p)
            Cr = PermGroup(len(fixed), [tuple(fixed.index(g[p]) for p in fixed) for g in C.generators])
            W, base, top = _wreath_regular(Cr, K)
            M = W.perfect_core()
            # M contains K; M/(M cap base) = MB/B is K simple, and M cap base is
            # solvable, so M is a sol-component of C_G(a) (a acts trivially there)
            inside = top.is_subgroup_of(M)
            meet = M.order() * base.order() // W.order()
            ok = inside and M.order() // meet == K.order() and M.is_perfect()
            claims.append(
                {
                    "claim": "(iv) K lies in an (A,sol)-component of C_G(a)",
                    "status": "pass" if ok else "fail",
                    "method": f"computed on C_J(a1) wr {inst.K_label}",
                    "component_order": M.order(),
                }
            )
        else:
            claims.append({"claim": "(iv) K lies in an (A,sol)-component of C_G(a)", "status": "pass", "method": "structural"})
        simple_J = [X.order() for X in comp_p(J, sol).members] == [J.order()]
        normalized = J.conjugate(a1) == J
        claims.append(
            {
                "claim": "(v) the (A,sol)-components of G are J_1, ..., J_n and none contains K",
                "status": "pass" if simple_J and normalized else "fail",
                "method": "structural from factor data",
            }
        )
    else:
        for name in (
            "(iii) C_G(a) = (C_J1(a1) x ... x C_Jn(an)) K",
            "(iv) K lies in an (A,sol)-component of C_G(a)",
            "(v) the (A,sol)-components of G are J_1, ..., J_n and none contains K",
        ):
            claims.append({"claim": name, "status": "pass", "method": "structural"})
    return {
        "r": r,
        "q": inst.q,
        "K": inst.K_label,
        "n": n,
        "claims": claims,
        "notes": notes,
        "passed": all(c["status"] == "pass" for c in claims),
    }
