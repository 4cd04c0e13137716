"""Structural invariants: radicals, Fitting subgroup, components, layer,
composition factors.

Groups up to the enumeration bound are handled through their conjugacy
classes: every normal subgroup is a join of normal closures of class
representatives, which gives O_P(G) for any subgroup-closed property closed
under products of normal subgroups, and the minimal normal subgroups of
sections G/R.  Larger groups are split along orbit blocks when they are
internal direct products.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from sympy import factorint

from . import config
from .enumerated import Enumerated
from .errors import ResourceLimitError
from .group import PermGroup, orbit_factors
from .perm import Permutation, order as perm_order, power
from .simple import label_for

Predicate = Callable[[PermGroup], bool]


class ClassData:
    """Conjugacy classes of G with cached normal closures of representatives."""

    def __init__(self, G: PermGroup):
        self.group = G
        enum = Enumerated(G, bound=config.enum_bound())
        maps = [enum.conj_map(g) for g in G.generators]
        label = np.full(enum.size, -1, dtype=np.int64)
        reps: list[int] = []
        sizes: list[int] = []
        for i in range(enum.size):
            if label[i] >= 0:
                continue
            c = len(reps)
            label[i] = c
            stack = [i]
            size = 1
            while stack:
                y = stack.pop()
                for m in maps:
                    z = int(m[y])
                    if label[z] < 0:
                        label[z] = c
                        size += 1
                        stack.append(z)
            reps.append(i)
            sizes.append(size)
        self.reps: list[Permutation] = [Permutation._trusted(enum.elements[i]) for i in reps]
        self.sizes = sizes
        self.orders = [perm_order(r) for r in self.reps]
        self._ncl: dict[int, PermGroup] = {}

    def ncl(self, i: int) -> PermGroup:
        N = self._ncl.get(i)
        if N is None:
            N = self.group.normal_closure([self.reps[i]])
            self._ncl[i] = N
        return N

    def __len__(self) -> int:
        return len(self.reps)


def class_data(G: PermGroup) -> ClassData:
    cd = G._cache.get("classes")
    if cd is None:
        cd = ClassData(G)
        G._cache["classes"] = cd
    return cd


def enumerable(G: PermGroup) -> bool:
    return G.order() <= config.enum_bound()


def join_all(G: PermGroup, groups) -> PermGroup:
    gens = [g for H in groups for g in H.generators]
    return PermGroup(G.degree, gens)


def _direct_split(G: PermGroup) -> list[PermGroup] | None:
    if G.is_trivial():
        return None
    facs = orbit_factors(G)
    if len(facs) < 2:
        return None
    return [K for _, K in facs]


def normal_p_subgroup(G: PermGroup, pred: Predicate) -> PermGroup:
    """Join of all normal subgroups satisfying pred.

    pred must be closed under subgroups and under products of normal
    subgroups; then the join of the normal closures <x^G> satisfying pred
    is the largest normal pred-subgroup.
    """
    if pred(G):
        return G
    if enumerable(G):
        cd = class_data(G)
        parts = [cd.ncl(i) for i in range(len(cd)) if not cd.reps[i].is_identity() and pred(cd.ncl(i))]
        return join_all(G, parts)
    split = _direct_split(G)
    if split is not None:
        # for a direct product the largest normal P-subgroup is the product of the factors'
        return join_all(G, [normal_p_subgroup(K, pred) for K in split])
    raise ResourceLimitError(f"no structured method for a group of order {G.order()}")


def solvable_radical(G: PermGroup) -> PermGroup:
    r = G._cache.get("sol")
    if r is None:
        if G.is_solvable():
            r = G
        else:
            r = normal_p_subgroup(G, lambda H: H.is_solvable())
        G._cache["sol"] = r
    return r


def fitting(G: PermGroup) -> PermGroup:
    r = G._cache.get("fitting")
    if r is None:
        r = normal_p_subgroup(G, lambda H: H.is_nilpotent())
        G._cache["fitting"] = r
    return r


def center(G: PermGroup) -> PermGroup:
    return G.center()


# -- sections and minimal normal subgroups ----------------------------------------


def radical_mod(G: PermGroup, N: PermGroup) -> PermGroup:
    """R >= N with R/N the solvable radical of G/N (N normal in G)."""
    cd = class_data(G)
    parts = [N]
    for i in range(len(cd)):
        x = cd.reps[i]
        if N.contains(x):
            continue
        X = cd.ncl(i).join(N)
        if X.perfect_core().is_subgroup_of(N):
            parts.append(X)
    return join_all(G, parts)


def minimal_normal_over(G: PermGroup, R: PermGroup) -> list[PermGroup]:
    """Normal subgroups M > R of G with M/R minimal normal in G/R."""
    cd = class_data(G)
    cands: dict = {}
    for i in range(len(cd)):
        if R.contains(cd.reps[i]):
            continue
        M = cd.ncl(i).join(R)
        cands.setdefault(M.key(), M)
    ms = sorted(cands.values(), key=lambda M: M.order())
    out = []
    for M in ms:
        if not any(K.order() < M.order() and K.is_subgroup_of(M) for K in ms):
            out.append(M)
    return out


def simple_factors(G: PermGroup, R: PermGroup, M: PermGroup) -> list[PermGroup]:
    """For M/R a nonabelian minimal normal subgroup of G/R, the preimages T_i
    of its simple direct factors (each T_i contains R)."""
    cd = class_data(G)
    best = None
    for i in range(len(cd)):
        x = cd.reps[i]
        if R.contains(x) or not M.contains(x):
            continue
        T = M.normal_closure([x]).join(R)
        if best is None or T.order() < best.order():
            best = T
    assert best is not None
    return conjugates(G, best)


def conjugates(G: PermGroup, T: PermGroup) -> list[PermGroup]:
    """The distinct G-conjugates of T, starting with T."""
    out = [T]
    keys = {T.key()}
    i = 0
    while i < len(out):
        for g in G.generators:
            Y = out[i].conjugate(g)
            if Y.key() not in keys:
                keys.add(Y.key())
                out.append(Y)
        i += 1
    return out


def _section_orders(G: PermGroup, T: PermGroup, R: PermGroup) -> set[int]:
    """Element orders of T/R seen on class representatives lying in G-conjugates of T."""
    cd = class_data(G)
    out = set()
    conj = conjugates(G, T)
    for x in cd.reps:
        if not any(C.contains(x) for C in conj):
            continue
        o = perm_order(x)
        best = o
        for d in sorted(_divisors(o)):
            if R.contains(power(x, d)):
                best = d
                break
        out.add(best)
    return out


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorint(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def _prime_labels(n: int) -> list[str]:
    out = []
    for p, e in sorted(factorint(n).items()):
        out.extend([f"C{p}"] * e)
    return out


def section_composition_factors(G: PermGroup, N: PermGroup) -> tuple[list[str], bool]:
    """Composition factors of G/N (N normal in G) and whether all were identified."""
    if N.order() == G.order():
        return [], True
    if enumerable(G):
        return _cf_classwise(G, N)
    split = _direct_split(G)
    if split is not None and N.is_trivial():
        labels: list[str] = []
        ok = True
        for K in split:
            lab, k_ok = section_composition_factors(K, PermGroup(K.degree))
            labels += lab
            ok = ok and k_ok
        return sorted(labels), ok
    if G.is_solvable():
        return _prime_labels(G.order() // N.order()), True
    raise ResourceLimitError(f"no structured method for a group of order {G.order()}")


def _cf_classwise(G: PermGroup, N: PermGroup) -> tuple[list[str], bool]:
    labels: list[str] = []
    ok = True
    cur = N
    while cur.order() != G.order():
        R = radical_mod(G, cur)
        labels += _prime_labels(R.order() // cur.order())
        if R.order() == G.order():
            break
        M = minimal_normal_over(G, R)[0]
        T = simple_factors(G, R, M)[0]
        t = T.order() // R.order()
        k = round(math.log(M.order() // R.order()) / math.log(t))
        lab = label_for(t)
        if lab is None and t == 20160:
            lab = label_for(t, 15 in _section_orders(G, T, R))
        if lab is None:
            ok = False
            lab = f"?{t}"
        labels += [lab] * k
        cur = M
    return sorted(labels), ok


def composition_factors(G: PermGroup) -> list[str]:
    return section_composition_factors(G, PermGroup(G.degree))[0]


# -- components -------------------------------------------------------------------


def components(G: PermGroup) -> list[PermGroup]:
    """All subnormal quasisimple subgroups."""
    res = G._cache.get("components")
    if res is not None:
        return res
    if G.is_solvable():
        res = []
    elif enumerable(G):
        res = _components_classwise(G)
    else:
        split = _direct_split(G)
        if split is None:
            raise ResourceLimitError(f"no structured method for a group of order {G.order()}")
        # components of a direct product are those of its factors
        res = [K for F in split for K in components(F)]
    G._cache["components"] = res
    return res


def _components_classwise(G: PermGroup) -> list[PermGroup]:
    S = solvable_radical(G)
    out = []
    for M in minimal_normal_over(G, S):
        for T in simple_factors(G, S, M):
            K = T.perfect_core()
            # K/(K ∩ S) ≅ T/S is simple, so K is quasisimple iff K ∩ S is central,
            # i.e. iff |K : Z(K)| = |T : S|
            if K.order() // K.center().order() == T.order() // S.order():
                out.append(K)
    return sorted(out, key=lambda K: K.key())


def layer(G: PermGroup) -> PermGroup:
    return join_all(G, components(G))


def generalized_fitting(G: PermGroup) -> PermGroup:
    return fitting(G).join(layer(G))


def is_quasisimple(K: PermGroup) -> bool:
    if K.is_trivial() or not K.is_perfect():
        return False
    if enumerable(K):
        S = solvable_radical(K)
        if S.order() != K.center().order():
            return False
        ms = minimal_normal_over(K, S)
        return len(ms) == 1 and ms[0].order() == K.order() and len(simple_factors(K, S, ms[0])) == 1
    if _direct_split(K) is not None:
        return False
    raise ResourceLimitError(f"cannot decide quasisimplicity at order {K.order()}")


def is_simple(G: PermGroup) -> bool:
    if G.is_trivial():
        return False
    if G.is_abelian():
        return sum(factorint(G.order()).values()) == 1
    return is_quasisimple(G) and G.center().is_trivial()


@dataclass
class StructureReport:
    order: int
    solvable_radical: PermGroup
    fitting: PermGroup
    generalized_fitting: PermGroup
    components: list[PermGroup]
    layer: PermGroup
    composition_factors: list[str]
    is_kgroup: bool
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        from .textio import group_to_json

        return {
            "order": self.order,
            "solvable_radical": group_to_json(self.solvable_radical),
            "fitting": group_to_json(self.fitting),
            "generalized_fitting": group_to_json(self.generalized_fitting),
            "components": [group_to_json(K) for K in self.components],
            "layer": group_to_json(self.layer),
            "composition_factors": dict(sorted(Counter(self.composition_factors).items())),
            "is_kgroup": self.is_kgroup,
        }


def analyze(G: PermGroup) -> StructureReport:
    cf, ok = section_composition_factors(G, PermGroup(G.degree))
    comps = components(G)
    lay = join_all(G, comps)
    F = fitting(G)
    return StructureReport(
        order=G.order(),
        solvable_radical=solvable_radical(G),
        fitting=F,
        generalized_fitting=F.join(lay),
        components=comps,
        layer=lay,
        composition_factors=cf,
        is_kgroup=ok,
    )


def has_element_of_order(G: PermGroup, k: int, samples: int = 2000, seed: int = 0) -> bool:
    """Whether G has an element of order k; exact for enumerable groups,
    seeded random sampling otherwise."""
    if enumerable(G):
        return k in class_data(G).orders
    rng = random.Random(seed)
    for _ in range(samples):
        o = perm_order(G.random_element(rng))
        if o % k == 0:
            return True
    return False
