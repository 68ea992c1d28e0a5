"""Relation schemas for the ideal monoid and its indecomposable part.

Generators are named ``J{s}`` (the ideal of all paths except e_s) and
``J{s}.{q}`` (its block on the q-th component of Q minus s, for s a sink
or source of degree >= 2).  The zero element is ``"0"``.

Each relation is a :class:`Relation` holding the schema letter, the index
tuple it was instantiated at, and two words over generator names.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bimodule import Subbimodule, generator_J, generator_J_split, support
from .errors import NotAdmissible
from .quiver import Quiver, Subgraph

__all__ = [
    "ZERO",
    "Relation",
    "j_name",
    "split_name",
    "j_generators",
    "b_generators",
    "hk_relations",
    "ind_relations",
]

ZERO = "0"
Word = tuple[str, ...]


@dataclass(frozen=True)
class Relation:
    schema: str
    indices: tuple
    lhs: Word
    rhs: Word

    def to_json(self) -> dict:
        return {
            "schema": self.schema,
            "indices": [list(i) if isinstance(i, tuple) else i for i in self.indices],
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
        }


def j_name(s: int) -> str:
    return f"J{s}"


def split_name(s: int, q: int) -> str:
    return f"J{s}.{q}"


def j_generators(q: Quiver) -> dict[str, Subbimodule]:
    return {j_name(s): generator_J(q, s) for s in q.vertices}


@lru_cache(maxsize=None)
def _b_generators(q: Quiver) -> tuple[tuple[str, Subbimodule], ...]:
    out = []
    for s in q.vertices:
        if s in q.Kprime:
            for qi in range(1, len(q.components_without(s)) + 1):
                out.append((split_name(s, qi), generator_J_split(q, s, qi)))
        else:
            out.append((j_name(s), generator_J(q, s)))
    return tuple(out)


def b_generators(q: Quiver) -> dict[str, Subbimodule]:
    """The minimal generating set of the indecomposable monoid, in vertex order."""
    return dict(_b_generators(q))


class _Collector:
    def __init__(self):
        self.rels: list[Relation] = []
        self._seen: set[tuple[Word, Word]] = set()

    def add(self, schema, indices, lhs, rhs):
        lhs, rhs = tuple(lhs), tuple(rhs)
        if lhs == rhs or (lhs, rhs) in self._seen or (rhs, lhs) in self._seen:
            return
        self._seen.add((lhs, rhs))
        self.rels.append(Relation(schema, tuple(indices), lhs, rhs))


def _hk_schemas(q: Quiver, verts, out: _Collector, prefix: str = "") -> None:
    """Idempotency, commutation without an edge, braid-like relations on arrows."""
    for i in verts:
        out.add(prefix + "a", (i,), (j_name(i),) * 2, (j_name(i),))
    for i in verts:
        for j in verts:
            if i < j and not q.adjacent(i, j):
                out.add(prefix + "b", (i, j), (j_name(i), j_name(j)), (j_name(j), j_name(i)))
    vs = set(verts)
    for i, j in q.arrows:
        if i in vs and j in vs:
            Ji, Jj = j_name(i), j_name(j)
            out.add(prefix + "c", (i, j), (Jj, Ji, Jj), (Jj, Ji))
            out.add(prefix + "c", (i, j), (Ji, Jj, Ji), (Jj, Ji))


def hk_relations(q: Quiver) -> list[Relation]:
    """Defining relations among the J_i (a Hecke-Kiselman monoid of Q)."""
    out = _Collector()
    _hk_schemas(q, list(q.vertices), out)
    return out.rels


@lru_cache(maxsize=None)
def _split_supports(q: Quiver) -> dict[tuple[int, int], Subgraph]:
    return {
        (s, qi): support(generator_J_split(q, s, qi))
        for s in sorted(q.Kprime)
        for qi in range(1, len(q.components_without(s)) + 1)
    }


def ind_relations(q: Quiver) -> list[Relation]:
    """Defining relations among the minimal generators of the indecomposable monoid."""
    if not q.is_admissible:
        raise NotAdmissible(f"{q!r} is not admissible")
    out = _Collector()
    N = [i for i in q.vertices if i not in q.Kprime]
    supp = _split_supports(q)
    split = list(supp)
    Z = (ZERO,)
    S = lambda s, p: split_name(s, p)  # noqa: E731
    J = j_name

    _hk_schemas(q, N, out, prefix="a")
    for s, qi in split:
        out.add("b", (s, qi), (S(s, qi),) * 2, (S(s, qi),))
    for s, qi in split:
        for s2, qj in split:
            if s2 == s and qj != qi:
                out.add("c", (s, qi, qj), (S(s, qi), S(s, qj)), Z)
    for s, qi in split:
        for t, p in split:
            if s < t and not q.adjacent(s, t):
                out.add("d", (s, qi, t, p), (S(s, qi), S(t, p)), (S(t, p), S(s, qi)))
    for s, qi in split:
        for i in N:
            if not q.adjacent(s, i):
                out.add("e", (s, qi, i), (S(s, qi), J(i)), (J(i), S(s, qi)))
    for s, t in q.arrows:
        if s in q.Kprime and t in q.Kprime:
            for qi in _comp_range(q, s):
                for p in _comp_range(q, t):
                    a, b = S(t, p), S(s, qi)
                    out.add("f", (s, qi, t, p), (a, b, a), (a, b))
                    out.add("f", (s, qi, t, p), (b, a, b), (a, b))
    for i, t in q.arrows:
        if i in N and t in q.Kprime:
            for p in _comp_range(q, t):
                a, b = S(t, p), J(i)
                out.add("g", (i, t, p), (a, b, a), (a, b))
                out.add("g", (i, t, p), (b, a, b), (a, b))
    for t, i in q.arrows:
        if i in N and t in q.Kprime:
            for p in _comp_range(q, t):
                a, b = S(t, p), J(i)
                out.add("h", (t, p, i), (a, b, a), (b, a))
                out.add("h", (t, p, i), (b, a, b), (b, a))
    for t in sorted(q.Kprime):
        for p in _comp_range(q, t):
            for p2 in _comp_range(q, t):
                if p2 == p:
                    continue
                for s in q.neighbors(t):
                    if s in q.Kprime:
                        for qi in _comp_range(q, s):
                            out.add("i", (t, p, s, qi, p2), (S(t, p), S(s, qi), S(t, p2)), Z)
                    else:
                        out.add("j", (t, p, s, p2), (S(t, p), J(s), S(t, p2)), Z)
    for s, qi in split:
        for t, p in split:
            if (s, qi) == (t, p):
                continue
            if supp[(t, p)] <= supp[(s, qi)]:
                out.add("k", (s, qi, t, p), (S(s, qi), S(t, p)), (S(t, p),))
            if not (supp[(t, p)].vertices & supp[(s, qi)].vertices):
                out.add("l", (s, qi, t, p), (S(s, qi), S(t, p)), Z)
    for s, qi in split:
        for i in N:
            if i not in supp[(s, qi)].vertices:
                out.add("m", (s, qi, i), (S(s, qi), J(i)), (S(s, qi),))
                out.add("m", (s, qi, i), (J(i), S(s, qi)), (S(s, qi),))
    return out.rels


def _comp_range(q: Quiver, s: int) -> range:
    return range(1, len(q.components_without(s)) + 1)
