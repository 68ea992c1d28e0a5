"""Special functions: the combinatorial labels of indecomposable ideals.

A function ``alpha: Q_0 -> Q_0 + {0}`` is stored as a tuple of length n
whose entry i-1 is alpha(i), with 0 meaning "zero".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Sequence

from .bimodule import Subbimodule, decompose, support
from .errors import (
    BadValue,
    CaseNotCovered,
    DomainError,
    NoUniqueGenerator,
    NotAdmissible,
    NotIndecomposable,
    NotSpecial,
    NotTypeA,
)
from .quiver import Quiver, Subgraph

__all__ = [
    "Classification",
    "CatalanTriple",
    "classify",
    "function_support",
    "enumerate_special",
    "special_by_support",
    "function_of_bimodule",
    "bimodule_of_function",
    "catalan",
    "catalan_numbers",
    "type_a_layout",
    "count_typeA",
    "count_typeA_case",
    "count_typeA_brute",
    "typeA_interval",
    "catalan_check",
]

SpecialFunction = tuple[int, ...]


def _require_admissible(q: Quiver) -> None:
    if not q.is_admissible:
        raise NotAdmissible(f"{q!r} has a vertex of degree >= 3 that is neither sink nor source")


def _check_values(q: Quiver, values: Sequence[int]) -> SpecialFunction:
    values = tuple(values)
    if len(values) != q.n:
        raise BadValue(f"expected {q.n} values, got {len(values)}")
    for v in values:
        if not isinstance(v, int) or not 0 <= v <= q.n:
            raise BadValue(f"value {v!r} outside 0..{q.n}")
    return values


@dataclass(frozen=True)
class Classification:
    is_path: bool
    is_monotone: bool
    support: Subgraph
    is_connected: bool
    is_special: bool


def function_support(q: Quiver, alpha: Sequence[int]) -> Subgraph:
    """Union of the maximal chains X that alpha maps partly into themselves.

    For a monotone path function this is the same as asking whether alpha
    sends the source of X into X.
    """
    chosen = []
    for chain in q.chains:
        members = set(chain)
        if any(alpha[i - 1] in members for i in chain):
            chosen.append(chain)
    return Subgraph.from_chains(chosen)


def _is_path(q: Quiver, alpha) -> bool:
    return all(a == 0 or q.reaches(i, a) for i, a in enumerate(alpha, 1))


def _is_monotone(q: Quiver, alpha) -> bool:
    # per arrow j -> i; composes along paths
    for j, i in q.arrows:
        ai = alpha[i - 1]
        if ai == 0:
            continue
        aj = alpha[j - 1]
        if aj == 0 or not q.reaches(aj, ai):
            return False
    return True


def _sink_condition(q: Quiver, alpha, supp: Subgraph) -> bool:
    return all(
        supp.degree(i) == 1 for i in q.K & supp.vertices if alpha[i - 1] == 0
    )


def classify(q: Quiver, alpha: Sequence[int]) -> Classification:
    _require_admissible(q)
    alpha = _check_values(q, alpha)
    is_path = _is_path(q, alpha)
    is_mono = is_path and _is_monotone(q, alpha)
    supp = function_support(q, alpha)
    connected = supp.is_connected()
    special = is_mono and connected and _sink_condition(q, alpha, supp)
    return Classification(is_path, is_mono, supp, connected, special)


@dataclass(frozen=True)
class _ChainData:
    source: int
    vmask: int
    emask: int


@lru_cache(maxsize=None)
def _chain_data(q: Quiver):
    edge_bit = {a: 1 << k for k, a in enumerate(q.arrows)}
    data = []
    for c in q.chains:
        vmask = sum(1 << (v - 1) for v in c)
        emask = sum(edge_bit[e] for e in zip(c, c[1:]))
        data.append(_ChainData(c[0], vmask, emask))
    incident = [sum(edge_bit[a] for a in q.arrows if i in a) for i in q.vertices]
    # chains sharing a vertex, for connectivity of unions of chains
    touch = [
        sum(1 << b for b, d in enumerate(data) if d.vmask & c.vmask) for c in data
    ]
    return tuple(data), tuple(incident), tuple(touch)


def _fast_special_support(q: Quiver, alpha) -> tuple[bool, int, int]:
    """For a monotone path function: (special?, vertex mask, chain mask)."""
    data, incident, touch = _chain_data(q)
    cmask = 0
    vmask = emask = 0
    for b, c in enumerate(data):
        a = alpha[c.source - 1]
        if a and c.vmask >> (a - 1) & 1:
            cmask |= 1 << b
            vmask |= c.vmask
            emask |= c.emask
    if cmask:
        low = cmask & -cmask
        seen = low
        frontier = low
        while frontier:
            nxt = 0
            for b in range(len(data)):
                if frontier >> b & 1:
                    nxt |= touch[b]
            nxt &= cmask & ~seen
            seen |= nxt
            frontier = nxt
        if seen != cmask:
            return False, vmask, cmask
    for i in q.K:
        if vmask >> (i - 1) & 1 and alpha[i - 1] == 0:
            if (emask & incident[i - 1]).bit_count() != 1:
                return False, vmask, cmask
    return True, vmask, cmask


def _monotone_path_functions(q: Quiver):
    """Backtrack over monotone path functions in topological order."""
    order = q.topological_order
    alpha = [0] * q.n
    succ = q.succ_mask

    def rec(pos):
        if pos == len(order):
            yield tuple(alpha)
            return
        i = order[pos]
        preds = q.in_neighbors[i]
        alpha[i - 1] = 0
        yield from rec(pos + 1)
        allowed = succ[i - 1]
        for j in preds:
            aj = alpha[j - 1]
            if aj == 0:
                allowed = 0
                break
            allowed &= succ[aj - 1]
        v = 1
        while allowed:
            if allowed & 1:
                alpha[i - 1] = v
                yield from rec(pos + 1)
            allowed >>= 1
            v += 1
        alpha[i - 1] = 0

    yield from rec(0)


def _support_key(q: Quiver, vmask: int) -> tuple[int, ...]:
    return tuple(v for v in q.vertices if vmask >> (v - 1) & 1)


def special_by_support(q: Quiver) -> dict[tuple[int, ...], list[SpecialFunction]]:
    """Special functions grouped by the sorted vertex list of their support."""
    _require_admissible(q)
    groups: dict[tuple[int, ...], list[SpecialFunction]] = {}
    for alpha in _monotone_path_functions(q):
        ok, vmask, _ = _fast_special_support(q, alpha)
        if ok:
            groups.setdefault(_support_key(q, vmask), []).append(alpha)
    return {k: sorted(groups[k]) for k in sorted(groups)}


def enumerate_special(q: Quiver) -> list[SpecialFunction]:
    """All special functions, by support (sorted vertex list), then lexicographically."""
    return [a for fs in special_by_support(q).values() for a in fs]


def function_of_bimodule(b: Subbimodule) -> SpecialFunction:
    """The label of an indecomposable ideal.

    Entry i is 0 when B e_i = 0, otherwise the vertex x whose successor set
    is exactly the column of B at i (B e_i is then the projective at x).
    """
    q = b.quiver
    _require_admissible(q)
    if len(decompose(b)) > 1:
        raise NotIndecomposable(f"{b!r} has more than one summand")
    succ = q.succ_mask
    out = []
    for i in q.vertices:
        col = b.cols[i - 1]
        if not col:
            out.append(0)
            continue
        gen = [x for x in q.vertices if succ[x - 1] == col]
        if len(gen) != 1:
            raise NoUniqueGenerator(f"column {i} of {b!r} is not a single projective")
        out.append(gen[0])
    return tuple(out)


def bimodule_of_function(q: Quiver, alpha: Sequence[int]) -> Subbimodule:
    """Span of a_ts over s with alpha(s) != 0 and t a successor of alpha(s)."""
    if not classify(q, alpha).is_special:
        raise NotSpecial(f"{tuple(alpha)} is not special on {q!r}")
    succ = q.succ_mask
    return Subbimodule(q, tuple(succ[a - 1] if a else 0 for a in alpha))


# ------------------------------------------------------------------ Catalan


def catalan(m: int) -> int:
    if m < 0:
        raise DomainError(f"cat({m}) undefined")
    return comb(2 * m, m) // (m + 1)


@dataclass(frozen=True)
class CatalanTriple:
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise DomainError(f"m must be >= 0, got {self.m}")

    @cached_property
    def cat(self) -> int:
        return catalan(self.m)

    @property
    def cat1(self) -> int:
        if self.m < 1:
            raise DomainError("cat1 needs m >= 1")
        return catalan(self.m) - catalan(self.m - 1)

    @property
    def cat2(self) -> int:
        if self.m < 2:
            raise DomainError("cat2 needs m >= 2")
        return catalan(self.m) - 2 * catalan(self.m - 1) + catalan(self.m - 2)


def catalan_numbers(m: int) -> CatalanTriple:
    return CatalanTriple(m)


def _cat(m):
    return catalan(m)


def _cat1(m):
    return CatalanTriple(m).cat1


def _cat2(m):
    return CatalanTriple(m).cat2


def _prod_cat(l, lo, hi):
    """prod_{s=lo}^{hi} cat(l_{s+1} - l_s), empty product = 1."""
    out = 1
    for s in range(lo, hi + 1):
        out *= _cat(l[s + 1] - l[s])
    return out


def type_a_layout(q: Quiver) -> tuple[tuple[int, ...], list[int]]:
    """Walk order of a path-shaped quiver and the 1-based positions of K(Q).

    The walk starts at the smaller-labelled end; for the standard labelling
    1 - 2 - ... - n, positions equal labels.
    """
    if any(q.degree(i) > 2 for i in q.vertices):
        raise NotTypeA(f"{q!r} has a vertex of degree > 2")
    ends = sorted(i for i in q.vertices if q.degree(i) == 1)
    walk = [ends[0]]
    while len(walk) < q.n:
        prev = walk[-2] if len(walk) > 1 else None
        walk.append(next(v for v in q.neighbors(walk[-1]) if v != prev))
    l = [pos for pos, v in enumerate(walk, 1) if v in q.K]
    return tuple(walk), l


def count_typeA_case(k: int, i: int, j: int) -> str:
    """Which of the seven counting cases applies to the index pair (i, j)."""
    if not 1 <= i < j <= k:
        raise CaseNotCovered(f"(i, j) = ({i}, {j}) is not a valid pair for k = {k}")
    if k == 2:
        return "i"
    if (i, j) in ((1, 2), (k - 1, k)):
        return "vii"
    if (i, j) == (1, k):
        return "iv"
    if k > 3 and i == 1 and 3 <= j <= k - 1:
        return "v"
    if k > 3 and j == k and 2 <= i <= k - 2:
        return "vi"
    if k > 3 and 2 <= i <= k - 2 and j == i + 1:
        return "ii"
    if k > 4 and 2 <= i and j <= k - 1 and j > i + 1:
        return "iii"
    raise CaseNotCovered(f"no counting case for (i, j) = ({i}, {j}), k = {k}")


def count_typeA(q: Quiver, i: int, j: int) -> int:
    """Number of special functions supported on the interval l_i .. l_j.

    ``i`` and ``j`` index the sorted positions l_1 < ... < l_k of the sinks
    and sources along the path.
    """
    _, pos = type_a_layout(q)
    k = len(pos)
    l = [None] + pos  # 1-based
    case = count_typeA_case(k, i, j)
    n = q.n
    if case == "i":
        return _cat(n + 1) - 1
    if case == "ii":
        return _cat2(l[i + 1] - l[i] + 2) - 1
    if case == "iii":
        return _cat1(l[i + 1] - l[i] + 1) * _cat1(l[j] - l[j - 1] + 1) * _prod_cat(l, i + 1, j - 2)
    if case == "iv":
        return _cat(l[2]) * _cat(l[k] - l[k - 1] + 1) * _prod_cat(l, 2, k - 2)
    if case == "v":
        return _cat(l[2]) * _cat1(l[j] - l[j - 1] + 1) * _prod_cat(l, 2, j - 2)
    if case == "vi":
        return _cat(l[k] - l[k - 1] + 1) * _cat1(l[i + 1] - l[i] + 1) * _prod_cat(l, i + 1, k - 2)
    # case vii
    if (i, j) == (1, 2):
        return _cat1(l[2] - l[1] + 2) - 1
    return _cat1(l[k] - l[k - 1] + 2) - 1


def typeA_interval(q: Quiver, i: int, j: int) -> tuple[int, ...]:
    """Vertices from position l_i to l_j along the path, sorted."""
    walk, pos = type_a_layout(q)
    if not 1 <= i < j <= len(pos):
        raise CaseNotCovered(f"(i, j) = ({i}, {j}) is not a valid pair for k = {len(pos)}")
    return tuple(sorted(walk[pos[i - 1] - 1 : pos[j - 1]]))


def count_typeA_brute(q: Quiver, i: int, j: int) -> int:
    """|C(i, j)| by filtering the full special-function census."""
    return len(special_by_support(q).get(typeA_interval(q, i, j), []))


def catalan_check(q: Quiver) -> list[dict]:
    """Formula versus census for every valid (i, j) on a path-shaped quiver."""
    _, pos = type_a_layout(q)
    groups = special_by_support(q)
    rows = []
    for i in range(1, len(pos) + 1):
        for j in range(i + 1, len(pos) + 1):
            brute = len(groups.get(typeA_interval(q, i, j), []))
            rows.append(
                {
                    "i": i,
                    "j": j,
                    "case": count_typeA_case(len(pos), i, j),
                    "formula": count_typeA(q, i, j),
                    "brute_force": brute,
                }
            )
    return rows
