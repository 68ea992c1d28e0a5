"""Monoid presentations, enumeration of presented monoids, and decategorification.

``enumerate_presented`` is a Todd-Coxeter style enumeration for monoids:
it grows a partial right Cayley graph, traces every relation from every
live node, and merges nodes with union-find when two sides disagree.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .bimodule import Subbimodule, identity_bimodule, zero_bimodule
from .errors import BudgetExceeded, GeneratorMismatch, NotAdmissible
from .monoid import FiniteMonoid, closure_from_right_action, generate_closure
from .quiver import Quiver
from .relations import ZERO, b_generators, hk_relations, ind_relations, j_generators

__all__ = [
    "MonoidPresentation",
    "IsomorphismResult",
    "hk_presentation",
    "ind_presentation",
    "decategorify",
    "matmul",
    "identity_matrix",
    "matrix_monoid",
    "enumerate_presented",
    "check_isomorphism",
]

IntMatrix = tuple[tuple[int, ...], ...]
Word = tuple[str, ...]


@dataclass(frozen=True)
class MonoidPresentation:
    alphabet: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...]
    zero_symbol: str | None = None

    def __post_init__(self):
        letters = set(self.alphabet)
        if self.zero_symbol is not None and self.zero_symbol not in letters:
            raise ValueError(f"zero symbol {self.zero_symbol!r} must be in the alphabet")
        seen, rels = set(), []
        for lhs, rhs in self.relations:
            lhs, rhs = tuple(lhs), tuple(rhs)
            bad = (set(lhs) | set(rhs)) - letters
            if bad:
                raise ValueError(f"relation uses unknown symbols {sorted(bad)}")
            if (lhs, rhs) not in seen and (rhs, lhs) not in seen:
                seen.add((lhs, rhs))
                rels.append((lhs, rhs))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "relations", tuple(rels))

    def all_relations(self) -> list[tuple[Word, Word]]:
        """The stated relations plus the absorbing laws for the zero symbol."""
        rels = list(self.relations)
        z = self.zero_symbol
        if z is not None:
            for g in self.alphabet:
                rels.append(((z, g), (z,)))
                if g != z:
                    rels.append(((g, z), (z,)))
        return rels

    def to_json(self) -> dict:
        return {
            "generators": list(self.alphabet),
            "zero": self.zero_symbol,
            "relations": [[list(lhs), list(rhs)] for lhs, rhs in self.relations],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj) -> MonoidPresentation:
        if isinstance(obj, str):
            obj = json.loads(obj)
        rels = tuple((tuple(l), tuple(r)) for l, r in obj["relations"])
        return cls(tuple(obj["generators"]), rels, obj.get("zero"))


def hk_presentation(q: Quiver) -> MonoidPresentation:
    """Generators J1..Jn with the Hecke-Kiselman relations of Q."""
    rels = tuple((r.lhs, r.rhs) for r in hk_relations(q))
    return MonoidPresentation(tuple(j_generators(q)), rels)


def ind_presentation(q: Quiver) -> MonoidPresentation:
    """The minimal generators of the indecomposable monoid, plus an absorbing zero."""
    if not q.is_admissible:
        raise NotAdmissible(f"{q!r} is not admissible")
    rels = tuple((r.lhs, r.rhs) for r in ind_relations(q))
    return MonoidPresentation(tuple(b_generators(q)) + (ZERO,), rels, ZERO)


# ------------------------------------------------------ decategorification


def decategorify(b: Subbimodule) -> IntMatrix:
    """Action of B on split Grothendieck classes of projectives.

    Column r is the sum of e_x over the minimal vertices x of the column
    of B at r, since B P_r is the direct sum of the projectives P_x.
    """
    q = b.quiver
    n = q.n
    succ = q.succ_mask
    rows = [[0] * n for _ in range(n)]
    for r in q.vertices:
        col = b.cols[r - 1]
        for x in q.vertices:
            if not col >> (x - 1) & 1:
                continue
            # x is minimal if no other member of the column reaches it
            if not any(y != x and col >> (y - 1) & 1 and succ[y - 1] >> (x - 1) & 1 for y in q.vertices):
                rows[x - 1][r - 1] += 1
    return tuple(tuple(row) for row in rows)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matrix_monoid(
    q: Quiver,
    gens: Mapping[str, Subbimodule] | Sequence[Subbimodule] | None = None,
    max_elements: int = 1_000_000,
) -> FiniteMonoid:
    """Closure of the decategorified generators under matrix product."""
    if gens is None:
        gens = j_generators(q)
    if not isinstance(gens, Mapping):
        gens = {f"g{k}": g for k, g in enumerate(gens, 1)}
    mats = {name: decategorify(g) for name, g in gens.items()}
    return generate_closure(mats, matmul, identity_matrix(q.n), max_elements)


# ------------------------------------------------------------- enumeration


class _CosetTable:
    def __init__(self, ngens: int, max_elements: int, max_steps: int):
        self.ngens = ngens
        self.rows: list[list[int]] = [[-1] * ngens]
        self.parent = [0]
        self.live = 1
        self.steps = 0
        self.max_elements = max_elements
        self.max_steps = max_steps

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def _tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            raise BudgetExceeded(f"enumeration exceeds {self.max_steps} steps")

    def new(self) -> int:
        if self.live >= self.max_elements:
            raise BudgetExceeded(f"enumeration exceeds {self.max_elements} live elements")
        c = len(self.rows)
        self.rows.append([-1] * self.ngens)
        self.parent.append(c)
        self.live += 1
        return c

    def follow(self, c: int, k: int) -> int:
        """c * generator k, defining a new node if needed."""
        self._tick()
        d = self.rows[c][k]
        if d < 0:
            d = self.new()
            self.rows[c][k] = d
            return d
        return self.find(d)

    def trace(self, c: int, word: Sequence[int]) -> int:
        for k in word:
            c = self.follow(c, k)
        return c

    def merge(self, a: int, b: int) -> None:
        queue = deque([(a, b)])
        while queue:
            x, y = queue.popleft()
            x, y = self.find(x), self.find(y)
            if x == y:
                continue
            keep, gone = min(x, y), max(x, y)
            self.parent[gone] = keep
            self.live -= 1
            rk, rg = self.rows[keep], self.rows[gone]
            for k in range(self.ngens):
                self._tick()
                e = rg[k]
                if e < 0:
                    continue
                if rk[k] < 0:
                    rk[k] = e
                else:
                    queue.append((rk[k], e))


def enumerate_presented(
    p: MonoidPresentation,
    max_elements: int = 100_000,
    max_steps: int = 10_000_000,
) -> FiniteMonoid:
    """The monoid presented by ``p``, elements labelled by shortlex-least words.

    Raises :class:`BudgetExceeded` when the budgets run out; that says
    nothing about whether the monoid is finite.
    """
    letters = {g: k for k, g in enumerate(p.alphabet)}
    rels = [([letters[g] for g in lhs], [letters[g] for g in rhs]) for lhs, rhs in p.all_relations()]
    tab = _CosetTable(len(p.alphabet), max_elements, max_steps)
    c = 0
    while c < len(tab.rows):
        if tab.find(c) == c:
            for lhs, rhs in rels:
                a = tab.trace(c, lhs)
                b = tab.trace(tab.find(c), rhs)
                if a != b:
                    tab.merge(a, b)
                if tab.find(c) != c:
                    break
            else:
                for k in range(tab.ngens):
                    tab.follow(c, k)
        c += 1
    root = tab.find(0)
    m = closure_from_right_action(
        p.alphabet, root, lambda x, k: tab.find(tab.rows[x][k]), max_elements=max_elements
    )
    m.elements = list(m.words)
    m.__dict__.pop("index", None)
    return m


# ------------------------------------------------------------- isomorphism


@dataclass
class IsomorphismResult:
    ok: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "witness": self.witness}


def check_isomorphism(m1: FiniteMonoid, m2: FiniteMonoid, pairing: Mapping[str, str] | None = None) -> IsomorphismResult:
    """Does the generator pairing extend to an isomorphism m1 -> m2?

    The candidate map is built by walking both right Cayley graphs in
    parallel; on success the witness holds the element bijection.
    """
    if pairing is None:
        pairing = {g: g for g in m1.gen_names}
    if set(pairing) != set(m1.gen_names) or sorted(pairing.values()) != sorted(m2.gen_names):
        raise GeneratorMismatch("pairing is not a bijection between the generator names")
    if len(m1) != len(m2):
        return IsomorphismResult(False, {"reason": "cardinality", "sizes": [len(m1), len(m2)]})
    cols2 = [m2.gen_names.index(pairing[g]) for g in m1.gen_names]
    f = np.full(len(m1), -1, dtype=np.int64)
    used = np.zeros(len(m2), dtype=bool)
    f[m1.identity], used[m2.identity] = m2.identity, True
    queue = deque([m1.identity])
    while queue:
        x = queue.popleft()
        for k, k2 in enumerate(cols2):
            y1, y2 = int(m1.right[x, k]), int(m2.right[f[x], k2])
            if f[y1] < 0:
                if used[y2]:
                    return IsomorphismResult(False, {"reason": "not injective", "word": list(m1.words[y1])})
                f[y1], used[y2] = y2, True
                queue.append(y1)
            elif f[y1] != y2:
                return IsomorphismResult(
                    False,
                    {"reason": "relation mismatch", "word": list(m1.words[x]) + [m1.gen_names[k]]},
                )
    if (f < 0).any():
        return IsomorphismResult(False, {"reason": "not generated"})
    if not (f[m1.table] == m2.table[np.ix_(f, f)]).all():
        return IsomorphismResult(False, {"reason": "table mismatch"})
    return IsomorphismResult(True, {"bijection": f.tolist()})


# ----------------------------------------------------------------- reports


def _fibres(p_monoid: FiniteMonoid, target: FiniteMonoid) -> dict[int, list[int]]:
    """Group elements of a presented monoid by their value in ``target``."""
    out: dict[int, list[int]] = {}
    for x, word in enumerate(p_monoid.words):
        out.setdefault(target.word_value(word), []).append(x)
    return out


def hk_chain(q: Quiver, max_elements: int = 100_000, max_steps: int = 10_000_000) -> dict:
    """Presented Hecke-Kiselman monoid vs ideal monoid vs matrix monoid."""
    s = enumerate_presented(hk_presentation(q), max_elements, max_steps)
    ideals = generate_closure(j_generators(q), lambda a, b: a * b, identity_bimodule(q), max_elements)
    mats = matrix_monoid(q, max_elements=max_elements)
    iso_si = check_isomorphism(s, ideals)
    iso_it = check_isomorphism(ideals, mats)
    failures = []
    if not iso_si:
        failures.append({"check": "presented ~ ideals", **iso_si.witness})
    if not iso_it:
        failures.append({"check": "ideals ~ matrices", **iso_it.witness})
    return {
        "orders": {"presented": len(s), "ideals": len(ideals), "matrices": len(mats)},
        "isomorphic": not failures,
        "failures": failures,
    }


def ind_chain(q: Quiver, max_elements: int = 100_000, max_steps: int = 10_000_000) -> dict:
    """Presented monoid of the indecomposable generators vs the indecomposable monoid.

    Besides the isomorphism test this reports how the presented monoid maps
    onto the ideals: ``extra_zero_words`` lists the distinct presented
    elements that evaluate to the zero ideal, and ``injective_off_zero``
    says whether every other fibre is a single element.
    """
    from .monoid import indecomposable_monoid

    s = enumerate_presented(ind_presentation(q), max_elements, max_steps)
    target = indecomposable_monoid(q, max_elements, zero_generator=True)
    iso = check_isomorphism(s, target)
    fib = _fibres(s, target)
    zero = target.zero
    zero_words = [list(s.words[x]) for x in fib.get(zero, [])]
    off_zero = all(len(v) == 1 for k, v in fib.items() if k != zero)
    failures = [] if iso else [{"check": "presented ~ indecomposables", **iso.witness}]
    return {
        "orders": {"presented": len(s), "indecomposables": len(target)},
        "isomorphic": bool(iso),
        "surjective": len(fib) == len(target),
        "injective_off_zero": off_zero,
        "zero_words": zero_words,
        "failures": failures,
    }


__all__ += ["hk_chain", "ind_chain"]
