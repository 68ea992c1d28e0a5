"""Subbimodules of the identity bimodule of a tree path algebra.

The path algebra of a tree has one basis path ``a_ts`` from s to t for every
successor t of s.  A two-sided ideal is spanned by the basis paths it
contains, and a set of paths spans an ideal iff it is stable under
extending a path by an arrow at either end.  So an ideal is stored as
``cols``: for each source vertex s, a bitmask of the targets t with
``a_ts`` in the ideal.  Each column is then an up-set for the successor
order, and the product is boolean matrix multiplication.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable

from .errors import (
    BadComponentIndex,
    EnumerationBudgetExceeded,
    InvalidPathPair,
    NotSplitVertex,
    QuiverMismatch,
)
from .quiver import Quiver, Subgraph

__all__ = [
    "Subbimodule",
    "path_basis",
    "closure",
    "is_subbimodule",
    "product",
    "identity_bimodule",
    "zero_bimodule",
    "generator_J",
    "generator_J_split",
    "decompose",
    "support",
    "enumerate_subbimodules",
]

PathPair = tuple[int, int]  # (target, source)


def _bits(mask: int) -> Iterable[int]:
    """Yield 1-based positions of set bits."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


@lru_cache(maxsize=None)
def path_basis(q: Quiver) -> tuple[PathPair, ...]:
    """All pairs (t, s) with t a successor of s, sorted by (s, t)."""
    return tuple((t, s) for s in q.vertices for t in sorted(_bits(q.succ_mask[s - 1])))


@lru_cache(maxsize=None)
def _basis_index(q: Quiver) -> dict[PathPair, int]:
    return {p: k for k, p in enumerate(path_basis(q))}


class Subbimodule:
    """A two-sided ideal, i.e. a successor-closed set of basis paths.

    Instances are immutable and compare by quiver and content.  Most code
    should build them through :func:`closure` or the named constructors.
    """

    __slots__ = ("quiver", "cols", "_hash", "_union")

    def __init__(self, quiver: Quiver, cols: tuple[int, ...]):
        self.quiver = quiver
        self.cols = cols
        self._hash = hash(cols)
        self._union = None

    def __eq__(self, other):
        if not isinstance(other, Subbimodule):
            return NotImplemented
        return self.cols == other.cols and (self.quiver is other.quiver or self.quiver == other.quiver)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        pairs = ",".join(f"({t},{s})" for t, s in self.pairs())
        return f"Subbimodule{{{pairs}}}"

    def __len__(self):
        return sum(c.bit_count() for c in self.cols)

    def __bool__(self):
        return any(self.cols)

    def __contains__(self, pair: PathPair) -> bool:
        t, s = pair
        return bool(self.cols[s - 1] >> (t - 1) & 1)

    def __le__(self, other: Subbimodule) -> bool:
        return all(a & ~b == 0 for a, b in zip(self.cols, other.cols))

    def __lt__(self, other: Subbimodule) -> bool:
        return self <= other and self != other

    def __mul__(self, other: Subbimodule) -> Subbimodule:
        return product(self, other)

    def __and__(self, other: Subbimodule) -> Subbimodule:
        return Subbimodule(self.quiver, tuple(a & b for a, b in zip(self.cols, other.cols)))

    def __or__(self, other: Subbimodule) -> Subbimodule:
        return Subbimodule(self.quiver, tuple(a | b for a, b in zip(self.cols, other.cols)))

    def pairs(self) -> list[PathPair]:
        """Basis paths (t, s) in the canonical (s, t) order."""
        return [(t, s) for s, c in enumerate(self.cols, 1) for t in _bits(c)]

    def column(self, s: int) -> frozenset[int]:
        """Targets t with a_ts in the ideal, i.e. the left module B e_s."""
        return frozenset(_bits(self.cols[s - 1]))

    @property
    def mask(self) -> int:
        """Bit-vector over the n*n grid, bit (s-1)*n + (t-1) for a_ts."""
        n = self.quiver.n
        return sum(c << (k * n) for k, c in enumerate(self.cols))

    def bits(self) -> tuple[int, ...]:
        """0/1 vector over :func:`path_basis`."""
        return tuple(int(p in self) for p in path_basis(self.quiver))

    def sort_key(self):
        return len(self), self.bits()

    def union_table(self) -> list[int]:
        """``table[m]`` is the union of the columns indexed by the bits of m."""
        if self._union is None:
            table = [0] * (1 << self.quiver.n)
            for m in range(1, len(table)):
                low = m & -m
                table[m] = table[m ^ low] | self.cols[low.bit_length() - 1]
            self._union = table
        return self._union

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, q: Quiver, obj) -> Subbimodule:
        if isinstance(obj, str):
            obj = json.loads(obj)
        pairs = [tuple(p) for p in obj["pairs"]]
        b = _from_pairs(q, pairs)
        if closure(q, pairs) != b:
            raise InvalidPathPair("pair list is not closed under the bimodule action")
        return b


def _from_pairs(q: Quiver, pairs: Iterable[PathPair]) -> Subbimodule:
    cols = [0] * q.n
    for p in pairs:
        t, s = p
        if not (isinstance(t, int) and isinstance(s, int) and 1 <= s <= q.n and 1 <= t <= q.n):
            raise InvalidPathPair(f"{p!r} is not a vertex pair of {q!r}")
        if not q.reaches(s, t):
            raise InvalidPathPair(f"no path from {s} to {t}")
        cols[s - 1] |= 1 << (t - 1)
    return Subbimodule(q, tuple(cols))


def _close_cols(q: Quiver, cols: list[int]) -> tuple[int, ...]:
    succ = q.succ_mask
    # left action: each column becomes an up-set for the successor order
    for k, c in enumerate(cols):
        acc = 0
        for t in _bits(c):
            acc |= succ[t - 1]
        cols[k] = acc
    # right action: an arrow x -> y forces col[x] to contain col[y]
    for x in reversed(q.topological_order):
        for y in q.out_neighbors[x]:
            cols[x - 1] |= cols[y - 1]
    return tuple(cols)


def closure(q: Quiver, seed: Iterable[PathPair]) -> Subbimodule:
    """The smallest ideal containing the given basis paths."""
    b = _from_pairs(q, seed)
    return Subbimodule(q, _close_cols(q, list(b.cols)))


def is_subbimodule(q: Quiver, pairs: Iterable[PathPair]) -> bool:
    try:
        b = _from_pairs(q, pairs)
    except InvalidPathPair:
        return False
    return Subbimodule(q, _close_cols(q, list(b.cols))) == b


def product(b: Subbimodule, d: Subbimodule) -> Subbimodule:
    """The ideal product BD: a_ts is in BD iff a_tk in B and a_ks in D for some k."""
    if b.quiver is not d.quiver and b.quiver != d.quiver:
        raise QuiverMismatch("factors live over different quivers")
    u = b.union_table()
    return Subbimodule(b.quiver, tuple(u[c] for c in d.cols))


def identity_bimodule(q: Quiver) -> Subbimodule:
    return Subbimodule(q, q.succ_mask)


def zero_bimodule(q: Quiver) -> Subbimodule:
    return Subbimodule(q, (0,) * q.n)


def generator_J(q: Quiver, s: int) -> Subbimodule:
    """Everything except the trivial path e_s."""
    q.check_vertex(s)
    cols = list(q.succ_mask)
    cols[s - 1] &= ~(1 << (s - 1))
    return Subbimodule(q, tuple(cols))


def generator_J_split(q: Quiver, s: int, qidx: int) -> Subbimodule:
    """Block of J_s supported on the qidx-th component of Q minus s, plus s.

    Components are numbered from 1 in order of their least vertex.
    """
    q.check_vertex(s)
    if s not in q.Kprime:
        raise NotSplitVertex(f"{s} is not a sink or source of degree >= 2")
    comps = q.components_without(s)
    if not (isinstance(qidx, int) and 1 <= qidx <= len(comps)):
        raise BadComponentIndex(f"component index {qidx!r} not in 1..{len(comps)}")
    keep = 1 << (s - 1)
    for v in comps[qidx - 1]:
        keep |= 1 << (v - 1)
    j = generator_J(q, s)
    cols = tuple(c & keep if (keep >> k) & 1 else 0 for k, c in enumerate(j.cols))
    return Subbimodule(q, cols)


def decompose(b: Subbimodule) -> list[Subbimodule]:
    """Split B into indecomposable summands.

    Summands are the connected components of the action graph restricted
    to B.  With every basis space one-dimensional and every action map
    between present paths nonzero, a connected piece has only scalar
    endomorphisms, so the pieces are indecomposable.
    """
    q = b.quiver
    pairs = b.pairs()
    if not pairs:
        return []
    idx = {p: k for k, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (t, s), k in idx.items():
        for y in q.out_neighbors[t]:
            j = idx.get((y, s))
            if j is not None:
                parent[find(j)] = find(k)
        for x in q.in_neighbors[s]:
            j = idx.get((t, x))
            if j is not None:
                parent[find(j)] = find(k)

    groups: dict[int, list[int]] = {}
    for k in range(len(pairs)):
        groups.setdefault(find(k), []).append(k)
    out = []
    for members in sorted(groups.values(), key=min):
        cols = [0] * q.n
        for k in members:
            t, s = pairs[k]
            cols[s - 1] |= 1 << (t - 1)
        out.append(Subbimodule(q, tuple(cols)))
    return out


def support_chains(b: Subbimodule) -> tuple[tuple[int, ...], ...]:
    """Maximal chains whose long path lies in B (the socle of B)."""
    return tuple(c for c in b.quiver.chains if (c[-1], c[0]) in b)


def support(b: Subbimodule) -> Subgraph:
    return Subgraph.from_chains(support_chains(b))


def enumerate_subbimodules(q: Quiver, max_count: int = 5_000_000) -> list[Subbimodule]:
    """All two-sided ideals, ordered by (size, bit-vector).

    Ideals are up-sets of the basis under the action order, so they are
    generated depth-first: basis paths are decided from the top of the
    order down, and a path may be included only when every path it maps to
    by one arrow is already included.
    """
    basis = path_basis(q)
    index = _basis_index(q)
    covers = []
    for t, s in basis:
        up = [index[(y, s)] for y in q.out_neighbors[t]]
        up += [index[(t, x)] for x in q.in_neighbors[s]]
        covers.append(up)
    # a_ts sits above a_t's' when it is longer; longest paths come first
    order = sorted(range(len(basis)), key=lambda k: -_path_length(q, basis[k]))
    out_cols: list[tuple[int, ...]] = []
    chosen = [False] * len(basis)

    def rec(pos: int, cols: list[int]):
        if pos == len(order):
            if len(out_cols) >= max_count:
                raise EnumerationBudgetExceeded(f"more than {max_count} subbimodules")
            out_cols.append(tuple(cols))
            return
        k = order[pos]
        rec(pos + 1, cols)
        if all(chosen[u] for u in covers[k]):
            t, s = basis[k]
            chosen[k] = True
            cols[s - 1] |= 1 << (t - 1)
            rec(pos + 1, cols)
            cols[s - 1] &= ~(1 << (t - 1))
            chosen[k] = False

    rec(0, [0] * q.n)
    result = [Subbimodule(q, c) for c in out_cols]
    result.sort(key=Subbimodule.sort_key)
    return result


@lru_cache(maxsize=None)
def _lengths(q: Quiver) -> dict[PathPair, int]:
    return {(t, s): len(q.path(s, t)) - 1 for t, s in path_basis(q)}


def _path_length(q: Quiver, pair: PathPair) -> int:
    return _lengths(q)[pair]
