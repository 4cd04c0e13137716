"""Brute-force group oracle on explicit element sets, independent of the engine."""

from __future__ import annotations

from itertools import combinations


def mul(a, b):
    return tuple(b[i] for i in a)


def inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def closure(gens, degree):
    e = tuple(range(degree))
    elems = {e}
    frontier = [e]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def elements(G):
    return closure(G.generators, G.degree)


def conj(x, g):
    return mul(mul(inv(g), x), g)


def comm(x, y):
    return mul(mul(inv(x), inv(y)), mul(x, y))


def all_subgroups(elems, degree):
    cyc = {closure([x], degree) for x in elems}
    subs = set(cyc)
    frontier = list(subs)
    while frontier:
        nxt = []
        for H in frontier:
            for C in cyc:
                if C <= H:
                    continue
                J = closure(_generators(H, degree) + _generators(C, degree), degree)
                if J not in subs:
                    subs.add(J)
                    nxt.append(J)
        frontier = nxt
    return subs


def _generators(H, degree):
    """A small generating set found greedily."""
    gens = []
    cur = frozenset([tuple(range(degree))])
    for x in sorted(H):
        if x not in cur:
            gens.append(x)
            cur = closure(gens, degree)
    return gens


def is_normal(N, elems):
    return all(conj(n, g) in N for n in N for g in elems)


def normal_subgroups(elems, degree):
    return [N for N in all_subgroups(elems, degree) if is_normal(N, elems)]


def commutator_subgroup(H, K, degree):
    return closure([comm(h, k) for h in H for k in K], degree)


def is_solvable(H, degree):
    while len(H) > 1:
        D = commutator_subgroup(H, H, degree)
        if D == H:
            return False
        H = D
    return True


def is_nilpotent(H, degree):
    L = H
    while len(L) > 1:
        nxt = commutator_subgroup(L, H, degree)
        if nxt == L:
            return False
        L = nxt
    return True


def centralizer(elems, xs):
    return frozenset(g for g in elems if all(mul(g, x) == mul(x, g) for x in xs))


def largest_normal_with(elems, degree, pred):
    good = [N for N in normal_subgroups(elems, degree) if pred(N)]
    return max(good, key=len)


def subgroup_pairs(subs):
    return combinations(sorted(subs, key=len), 2)


def derived_residual(elems, degree):
    H = frozenset(elems)
    while True:
        D = commutator_subgroup(H, H, degree)
        if D == H:
            return H
        H = D


def nilpotent_residual(elems, degree):
    G = frozenset(elems)
    L = G
    while True:
        nxt = commutator_subgroup(L, G, degree)
        if nxt == L:
            return L
        L = nxt


def pi_number(n, primes):
    for p in primes:
        while n % p == 0:
            n //= p
    return n == 1


def prime_divisors(n):
    out, p = set(), 2
    while n > 1:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    return out
