"""Text formats for groups, actions and functors, and JSON rendering.

Group spec::

    degree 5
    (1 2 3 4 5)
    (3 4 5)

Action spec: a group spec for the wrapper W followed by

    group: 1 2
    actors: 3
    prime: 2

where the indices (1-based) refer to the wrapper's generator lines.
Functor spec: an action spec followed by one line per subgroup of order r
of A, ``theta <word> : <gen>; <gen>; ...`` with word a product such as
``a1*a2^2`` of actor generators.  Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re

from .actions import CoprimeAction
from .errors import PreconditionError
from .group import PermGroup
from .perm import Permutation, format_cycles, parse_cycles


class SpecError(PreconditionError):
    pass


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _parse_degree(line: str) -> int:
    m = re.fullmatch(r"degree\s+(\d+)", line)
    if not m:
        raise SpecError(f"expected 'degree N', got {line!r}")
    return int(m.group(1))


def parse_group_spec(text: str) -> PermGroup:
    lines = _lines(text)
    if not lines:
        raise SpecError("empty group spec")
    n = _parse_degree(lines[0])
    gens = [Permutation(parse_cycles(line, n)) for line in lines[1:]]
    return PermGroup(n, gens)


def format_group_spec(G: PermGroup) -> str:
    return "\n".join([f"degree {G.degree}"] + [format_cycles(g) for g in G.generators]) + "\n"


def _parse_indices(value: str, count: int) -> list[int]:
    idx = [int(tok) for tok in value.replace(",", " ").split()]
    for i in idx:
        if not 1 <= i <= count:
            raise SpecError(f"generator index {i} out of range 1..{count}")
    return [i - 1 for i in idx]


def parse_action_spec(text: str, require_coprime: bool = True) -> CoprimeAction:
    lines = _lines(text)
    if not lines:
        raise SpecError("empty action spec")
    n = _parse_degree(lines[0])
    gens: list[Permutation] = []
    fields: dict[str, str] = {}
    extra: list[str] = []
    for line in lines[1:]:
        m = re.fullmatch(r"(group|actors|prime|name)\s*:\s*(.*)", line)
        if m:
            fields[m.group(1)] = m.group(2).strip()
        elif line.startswith("theta"):
            extra.append(line)
        elif fields:
            raise SpecError(f"generator line after the header fields: {line!r}")
        else:
            gens.append(Permutation(parse_cycles(line, n)))
    for key in ("group", "actors", "prime"):
        if key not in fields:
            raise SpecError(f"action spec lacks '{key}:'")
    gi = _parse_indices(fields["group"], len(gens))
    ai = _parse_indices(fields["actors"], len(gens))
    if set(gi) & set(ai) or sorted(gi + ai) != list(range(len(gens))):
        raise SpecError("'group' and 'actors' must partition the generator list")
    G = PermGroup(n, [gens[i] for i in gi])
    return CoprimeAction.build(
        G, [gens[i] for i in ai], int(fields["prime"]), name=fields.get("name", ""), require_coprime=require_coprime
    )


def format_action_spec(act: CoprimeAction) -> str:
    G = act.group
    lines = [f"degree {G.degree}"]
    lines += [format_cycles(g) for g in G.generators]
    lines += [format_cycles(a) for a in act.actor_basis]
    ng, na = len(G.generators), len(act.actor_basis)
    lines.append("group: " + " ".join(str(i + 1) for i in range(ng)))
    lines.append("actors: " + " ".join(str(ng + i + 1) for i in range(na)))
    lines.append(f"prime: {act.prime}")
    if act.name:
        lines.append(f"name: {act.name}")
    return "\n".join(lines) + "\n"


def parse_word(word: str, rank: int, r: int) -> tuple[int, ...]:
    """'a1*a2^2' -> exponent vector over the actor basis."""
    vec = [0] * rank
    for tok in re.split(r"[*\s]+", word.strip()):
        if not tok:
            continue
        m = re.fullmatch(r"a(\d+)(?:\^(-?\d+))?", tok)
        if not m:
            raise SpecError(f"bad actor word token {tok!r}")
        i = int(m.group(1)) - 1
        if not 0 <= i < rank:
            raise SpecError(f"actor generator a{i + 1} out of range")
        vec[i] = (vec[i] + int(m.group(2) or 1)) % r
    if not any(vec):
        raise SpecError("theta word must be a nonidentity element")
    return tuple(vec)


def format_word(vec) -> str:
    parts = []
    for i, e in enumerate(vec):
        if e == 1:
            parts.append(f"a{i + 1}")
        elif e:
            parts.append(f"a{i + 1}^{e}")
    return "*".join(parts)


def parse_functor_spec(text: str):
    from .signalizer import SignalizerFunctor

    act = parse_action_spec(text)
    values = {}
    n = act.group.degree
    for line in _lines(text):
        if not line.startswith("theta"):
            continue
        m = re.fullmatch(r"theta\s+(.+?)\s*:\s*(.*)", line)
        if not m:
            raise SpecError(f"bad theta line {line!r}")
        vec = parse_word(m.group(1), act.rank, act.prime)
        gens = [Permutation(parse_cycles(tok, n)) for tok in m.group(2).split(";") if tok.strip()]
        values[act.normalize_vector(vec)] = PermGroup(n, gens)
    return SignalizerFunctor.from_values(act, values)


def format_functor_spec(f) -> str:
    lines = [format_action_spec(f.action).rstrip("\n")]
    for vec in f.action.cyclic_vectors:
        H = f.value(vec)
        lines.append(f"theta {format_word(vec)} : " + "; ".join(format_cycles(g) for g in H.generators))
    return "\n".join(lines) + "\n"


def group_to_json(G: PermGroup) -> dict:
    return {"degree": G.degree, "order": G.order(), "generators": [format_cycles(g) for g in G.generators]}
