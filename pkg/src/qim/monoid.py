"""Finite monoids generated under the ideal product.

A :class:`FiniteMonoid` is produced by breadth-first closure of a named
generating set.  Element 0 is always the identity, and every element
carries the shortest generator word that reached it (ties broken by
generator order).  The full multiplication table is derived lazily from
the right Cayley graph.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Mapping, Sequence

import numpy as np

from .bimodule import (
    Subbimodule,
    decompose,
    enumerate_subbimodules,
    identity_bimodule,
    product,
    support,
    zero_bimodule,
)
from .errors import BudgetExceeded, NotAdmissible, NotIndecomposable, NotSpecialSubtree
from .quiver import Quiver, Subgraph
from .relations import ZERO, Relation, b_generators, hk_relations, ind_relations, j_generators

__all__ = [
    "FiniteMonoid",
    "RelationReport",
    "closure_from_right_action",
    "generate_closure",
    "ideal_monoid",
    "indecomposable_monoid",
    "star",
    "check_relations",
    "evaluate_word",
    "minimal_generating_check",
    "b_omega",
    "b_omega_census",
    "special_subtrees",
    "maximal_elements",
    "maximal_elements_census",
    "DEFAULT_MAX_ELEMENTS",
]

DEFAULT_MAX_ELEMENTS = 1_000_000


@dataclass
class FiniteMonoid:
    elements: list
    right: np.ndarray  # right[x, k] = x * generator k
    gen_names: tuple[str, ...]
    words: list[tuple[str, ...]]
    parent: list[tuple[int, int]] = field(repr=False)
    identity: int = 0

    def __len__(self):
        return len(self.elements)

    @cached_property
    def generators(self) -> dict[str, int]:
        return {name: int(self.right[0, k]) for k, name in enumerate(self.gen_names)}

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {e: k for k, e in enumerate(self.elements)}

    @cached_property
    def table(self) -> np.ndarray:
        """``table[x, y]`` is the index of x * y."""
        size = len(self.elements)
        t = np.empty((size, size), dtype=np.int32)
        t[:, 0] = np.arange(size)
        for y in range(1, size):
            p, k = self.parent[y]
            t[:, y] = self.right[t[:, p], k]
        return t

    @cached_property
    def zero(self) -> int | None:
        t = self.table
        ar = np.arange(len(t))
        hits = np.flatnonzero((t == ar[:, None]).all(axis=1) & (t == ar[None, :]).all(axis=0))
        return int(hits[0]) if len(hits) else None

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def word_value(self, word: Sequence[str]) -> int:
        x = self.identity
        for letter in word:
            x = int(self.right[x, self.gen_names.index(letter)])
        return x

    def check_associativity(self, exhaustive_limit: int = 200, samples: int = 50_000, seed: int = 0) -> bool:
        t = self.table
        size = len(t)
        if size <= exhaustive_limit:
            lhs = t[t, :]  # (x*y)*z indexed [x, y, z]
            rhs = t[np.arange(size)[:, None, None], t[None, :, :]]
            return bool((lhs == rhs).all())
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, size, size=(3, samples))
        return bool((t[t[x, y], z] == t[x, t[y, z]]).all())

    def submonoid(self, names: Sequence[str]) -> set[int]:
        """Elements reachable from the identity using only the named generators."""
        cols = [self.gen_names.index(n) for n in names]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for k in cols:
                    y = int(self.right[x, k])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def label(self, x: int) -> str:
        return "*".join(self.words[x]) or "1"

    def to_json(self, serialize: Callable = None) -> dict:
        ser = serialize or (lambda e: e)
        return {
            "elements": [ser(e) for e in self.elements],
            "words": [list(w) for w in self.words],
            "table": self.table.tolist(),
            "identity": self.identity,
            "zero": self.zero,
            "generators": self.generators,
        }

    def dumps(self, serialize: Callable = None) -> str:
        return json.dumps(self.to_json(serialize))

    def table_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        labels = [self.label(x) for x in range(len(self))]
        w.writerow([""] + labels)
        for x, row in enumerate(self.table.tolist()):
            w.writerow([labels[x]] + [labels[y] for y in row])
        return buf.getvalue()


def closure_from_right_action(
    names: Sequence[str],
    identity: Hashable,
    right_mul: Callable[[Hashable, int], Hashable],
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> FiniteMonoid:
    """BFS over the right Cayley graph; ``right_mul(x, k)`` multiplies by generator k."""
    elements = [identity]
    index = {identity: 0}
    words: list[tuple[str, ...]] = [()]
    parent = [(-1, -1)]
    rows = []
    i = 0
    while i < len(elements):
        x = elements[i]
        row = []
        for k, name in enumerate(names):
            y = right_mul(x, k)
            j = index.get(y)
            if j is None:
                if len(elements) >= max_elements:
                    raise BudgetExceeded(f"closure exceeds {max_elements} elements")
                j = len(elements)
                index[y] = j
                elements.append(y)
                words.append(words[i] + (name,))
                parent.append((i, k))
            row.append(j)
        rows.append(row)
        i += 1
    right = np.array(rows, dtype=np.int32).reshape(len(elements), len(names))
    m = FiniteMonoid(elements, right, tuple(names), words, parent)
    m.__dict__["index"] = index
    return m


def generate_closure(
    gens: Mapping[str, Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> FiniteMonoid:
    """All products of the generators, including the empty product."""
    names = list(gens)
    values = [gens[n] for n in names]
    return closure_from_right_action(names, identity, lambda x, k: mul(x, values[k]), max_elements)


def ideal_monoid(q: Quiver, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteMonoid:
    """The monoid of all two-sided ideals, generated by J_1, ..., J_n."""
    return generate_closure(j_generators(q), product, identity_bimodule(q), max_elements)


def _require_admissible(q: Quiver) -> None:
    if not q.is_admissible:
        raise NotAdmissible(f"{q!r} is not admissible")


def indecomposable_monoid(
    q: Quiver, max_elements: int = DEFAULT_MAX_ELEMENTS, zero_generator: bool = False
) -> FiniteMonoid:
    """Indecomposable ideals plus zero, generated by the J_s and J_s-blocks.

    With ``zero_generator`` the zero ideal is added as an extra generator
    named ``"0"``, to match presentations that carry an explicit zero.
    """
    _require_admissible(q)
    gens = b_generators(q)
    if zero_generator:
        gens[ZERO] = zero_bimodule(q)
    return generate_closure(gens, product, identity_bimodule(q), max_elements)


def star(b: Subbimodule, d: Subbimodule) -> list[Subbimodule]:
    """Indecomposable summands of BD (the multivalued product)."""
    for x in (b, d):
        if len(decompose(x)) != 1:
            raise NotIndecomposable(f"{x!r} is not indecomposable")
    return decompose(product(b, d))


# ------------------------------------------------------------- relations


@dataclass
class RelationReport:
    mode: str
    checked: int
    failures: list[dict]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"mode": self.mode, "checked": self.checked, "ok": self.ok, "failures": self.failures}


def evaluate_word(q: Quiver, gens: Mapping[str, Subbimodule], word: Sequence[str]) -> Subbimodule:
    out = identity_bimodule(q)
    for letter in word:
        out = product(out, zero_bimodule(q) if letter == ZERO else gens[letter])
    return out


def check_relations(q: Quiver, mode: str) -> RelationReport:
    """Evaluate every instantiated relation as an exact equality of ideals.

    ``mode`` is ``"prop51"`` (relations among the J_i) or ``"prop52"``
    (relations among the minimal generators of the indecomposable monoid).
    """
    if mode == "prop51":
        gens, rels = j_generators(q), hk_relations(q)
    elif mode == "prop52":
        _require_admissible(q)
        gens, rels = b_generators(q), ind_relations(q)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    failures = []
    for rel in rels:
        lhs, rhs = evaluate_word(q, gens, rel.lhs), evaluate_word(q, gens, rel.rhs)
        if lhs != rhs:
            failures.append({**rel.to_json(), "lhs_value": lhs.to_json(), "rhs_value": rhs.to_json()})
    return RelationReport(mode, len(rels), failures)


def minimal_generating_check(m: FiniteMonoid, names: Sequence[str] | None = None) -> dict[str, bool]:
    """For each generator: True iff dropping it gives a proper submonoid."""
    names = list(m.gen_names if names is None else names)
    size = len(m)
    return {g: len(m.submonoid([h for h in names if h != g])) < size for g in names}


# ------------------------------------------------------ partial order


def special_subtrees(q: Quiver) -> list[Subgraph]:
    """Supports of special functions, the empty one included."""
    from .specialfunc import special_by_support

    _require_admissible(q)
    return [Subgraph.full(q, vs) if vs else Subgraph() for vs in special_by_support(q)]


def _as_subgraph(q: Quiver, omega) -> Subgraph:
    if isinstance(omega, Subgraph):
        return omega
    return Subgraph.full(q, omega)


def b_omega_census(q: Quiver, omega) -> Subbimodule:
    """Inclusion-maximum of the indecomposables supported on omega, from the census."""
    from .specialfunc import bimodule_of_function, special_by_support

    _require_admissible(q)
    omega = _as_subgraph(q, omega)
    groups = special_by_support(q)
    key = tuple(sorted(omega.vertices))
    if key not in groups or (omega and Subgraph.full(q, key) != omega):
        raise NotSpecialSubtree(f"{sorted(omega.vertices)} is not the support of a special function")
    members = [bimodule_of_function(q, a) for a in groups[key]]
    top = members[0]
    for b in members[1:]:
        top = top | b
    if top not in members:
        raise NotSpecialSubtree(f"no unique maximum over support {key}")
    return top


def b_omega(q: Quiver, omega, check: bool = False) -> Subbimodule:
    """Largest indecomposable ideal with support omega, as a product of J-blocks.

    The factors are the blocks J_t^(p) at sources t, then J_s^(q) at sinks s,
    over the sinks and sources of degree >= 2 that have degree 1 in omega;
    the block chosen is the one whose component meets omega.
    """
    from .relations import split_name

    _require_admissible(q)
    omega = _as_subgraph(q, omega)
    if omega not in special_subtrees(q):
        raise NotSpecialSubtree(f"{sorted(omega.vertices)} is not the support of a special function")
    if not omega:
        return zero_bimodule(q)
    gens = b_generators(q)
    ends = [i for i in sorted(q.Kprime & omega.vertices) if omega.degree(i) == 1]
    factors = []
    for group in (q.sources, q.sinks):
        for i in ends:
            if i in group:
                comps = q.components_without(i)
                p = next(k for k, c in enumerate(comps, 1) if c & omega.vertices)
                factors.append(split_name(i, p))
    out = evaluate_word(q, gens, factors)
    if check:
        census = b_omega_census(q, omega)
        assert out == census, f"product formula {out!r} != census maximum {census!r}"
    return out


def maximal_elements(q: Quiver) -> list[Subbimodule]:
    """The J_s with s not in K'(Q): maximal full-support indecomposables below A."""
    from .bimodule import generator_J

    _require_admissible(q)
    return [generator_J(q, s) for s in q.vertices if s not in q.Kprime]


def maximal_elements_census(q: Quiver) -> list[Subbimodule]:
    """Inclusion-maximal elements among full-support indecomposables other than A."""
    from .specialfunc import bimodule_of_function, special_by_support

    _require_admissible(q)
    full = tuple(q.vertices)
    top = identity_bimodule(q)
    pool = [bimodule_of_function(q, a) for a in special_by_support(q).get(full, [])]
    pool = [b for b in pool if b != top]
    return [b for b in pool if not any(b < c for c in pool)]


def indecomposable_census(q: Quiver, max_count: int = 5_000_000) -> list[Subbimodule]:
    """Indecomposable ideals, found by decomposing every ideal."""
    return [b for b in enumerate_subbimodules(q, max_count) if len(decompose(b)) == 1]


__all__.append("indecomposable_census")
