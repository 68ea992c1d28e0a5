"""Oriented tree quivers and their combinatorics.

Vertices are the integers ``1..n``; an arrow is a pair ``(source, target)``.
Everything here is immutable, and the derived data (reachability, maximal
chains, ...) is computed once per quiver and cached on the instance.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import networkx as nx

from .errors import BadVertexIndex, NotATree, QuiverSyntaxError

__all__ = [
    "Quiver",
    "Subgraph",
    "ValidationReport",
    "parse_quiver",
    "load_quiver",
    "dumps_quiver",
    "validate",
    "validate_arrows",
    "successors",
    "boundary_sets",
    "maximal_chains",
    "components_without",
    "admissible_trees",
    "type_a_orientations",
]


def _tree_problems(n: int, arrows) -> tuple[bool, bool]:
    """Return (connected, tree) for the underlying undirected graph."""
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))
    g.add_edges_from(arrows)
    connected = n > 0 and nx.is_connected(g)
    tree = connected and len(arrows) == n - 1 and g.number_of_edges() == n - 1
    return connected, tree


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise BadVertexIndex(f"a quiver needs at least 2 vertices, got n={self.n!r}")
        arrows = tuple(sorted((int(s), int(t)) for s, t in self.arrows))
        for s, t in arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise BadVertexIndex(f"arrow {s}->{t} leaves the vertex range 1..{self.n}")
            if s == t:
                raise NotATree(f"self-loop at {s}")
        if len({frozenset(a) for a in arrows}) != len(arrows):
            raise NotATree("repeated arrow or 2-cycle between a vertex pair")
        connected, tree = _tree_problems(self.n, arrows)
        if not connected:
            raise NotATree("underlying graph is disconnected")
        if not tree:
            raise NotATree("underlying graph has a cycle")
        object.__setattr__(self, "arrows", arrows)

    def __repr__(self):
        arr = ", ".join(f"{s}->{t}" for s, t in self.arrows)
        return f"Quiver(n={self.n}, [{arr}])"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.n):
            raise BadVertexIndex(f"vertex {i!r} not in 1..{self.n}")

    @cached_property
    def out_neighbors(self) -> dict[int, tuple[int, ...]]:
        out = {i: [] for i in self.vertices}
        for s, t in self.arrows:
            out[s].append(t)
        return {i: tuple(v) for i, v in out.items()}

    @cached_property
    def in_neighbors(self) -> dict[int, tuple[int, ...]]:
        inn = {i: [] for i in self.vertices}
        for s, t in self.arrows:
            inn[t].append(s)
        return {i: tuple(v) for i, v in inn.items()}

    def degree(self, i: int) -> int:
        return len(self.out_neighbors[i]) + len(self.in_neighbors[i])

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(self.out_neighbors[i] + self.in_neighbors[i]))

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.out_neighbors[i] or j in self.in_neighbors[i]

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return tuple(nx.lexicographical_topological_sort(g))

    @cached_property
    def succ_mask(self) -> tuple[int, ...]:
        """``succ_mask[i-1]`` has bit ``j-1`` set iff j is a successor of i."""
        masks = [0] * self.n
        for i in reversed(self.topological_order):
            m = 1 << (i - 1)
            for t in self.out_neighbors[i]:
                m |= masks[t - 1]
            masks[i - 1] = m
        return tuple(masks)

    def reaches(self, i: int, j: int) -> bool:
        """True iff there is a (possibly empty) oriented path i -> ... -> j."""
        return bool(self.succ_mask[i - 1] >> (j - 1) & 1)

    @cached_property
    def sinks(self) -> frozenset[int]:
        return frozenset(i for i in self.vertices if not self.out_neighbors[i])

    @cached_property
    def sources(self) -> frozenset[int]:
        return frozenset(i for i in self.vertices if not self.in_neighbors[i])

    @cached_property
    def K(self) -> frozenset[int]:
        return self.sinks | self.sources

    @cached_property
    def Kprime(self) -> frozenset[int]:
        return frozenset(i for i in self.K if self.degree(i) >= 2)

    @cached_property
    def is_admissible(self) -> bool:
        return all(i in self.K for i in self.vertices if self.degree(i) >= 3)

    def path(self, i: int, j: int) -> tuple[int, ...]:
        """The oriented path from i to j (j must be a successor of i)."""
        if not self.reaches(i, j):
            raise ValueError(f"{j} is not a successor of {i}")
        out = [i]
        while out[-1] != j:
            out.append(next(t for t in self.out_neighbors[out[-1]] if self.reaches(t, j)))
        return tuple(out)

    @cached_property
    def chains(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            self.path(s, t)
            for s in sorted(self.sources)
            for t in sorted(self.sinks)
            if s != t and self.reaches(s, t)
        )

    def components_without(self, s: int) -> tuple[frozenset[int], ...]:
        return self._components[s]

    @cached_property
    def _components(self) -> dict[int, tuple[frozenset[int], ...]]:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        out = {}
        for s in self.vertices:
            h = g.subgraph(v for v in self.vertices if v != s)
            comps = [frozenset(c) for c in nx.connected_components(h)]
            out[s] = tuple(sorted(comps, key=min))
        return out

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return g


@dataclass(frozen=True)
class Subgraph:
    """A (not necessarily full) subgraph of a quiver: vertices plus arrows."""

    vertices: frozenset[int] = field(default_factory=frozenset)
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def degree(self, i: int) -> int:
        return sum(i in e for e in self.edges)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return nx.is_connected(g)

    def __and__(self, other: Subgraph) -> Subgraph:
        return Subgraph(self.vertices & other.vertices, self.edges & other.edges)

    def __or__(self, other: Subgraph) -> Subgraph:
        return Subgraph(self.vertices | other.vertices, self.edges | other.edges)

    def __le__(self, other: Subgraph) -> bool:
        return self.vertices <= other.vertices and self.edges <= other.edges

    def __bool__(self):
        return bool(self.vertices)

    def sort_key(self):
        return tuple(sorted(self.vertices)), tuple(sorted(self.edges))

    def to_json(self) -> dict:
        return {"vertices": sorted(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_chains(cls, chains: Iterable[tuple[int, ...]]) -> Subgraph:
        verts, edges = set(), set()
        for c in chains:
            verts.update(c)
            edges.update(zip(c, c[1:]))
        return cls(frozenset(verts), frozenset(edges))

    @classmethod
    def full(cls, q: Quiver, vertices: Iterable[int]) -> Subgraph:
        vs = frozenset(vertices)
        return cls(vs, frozenset(a for a in q.arrows if a[0] in vs and a[1] in vs))


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    tree: bool
    admissible: bool
    offending_vertices: frozenset[int]

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "tree": self.tree,
            "admissible": self.admissible,
            "offending_vertices": sorted(self.offending_vertices),
        }


# ---------------------------------------------------------------- parsing


def _parse_json(text: str) -> tuple[int, list]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverSyntaxError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "arrows" not in obj:
        raise QuiverSyntaxError('expected an object with "vertices" and "arrows"')
    n, arrows = obj["vertices"], obj["arrows"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise QuiverSyntaxError('"vertices" must be an integer')
    if not isinstance(arrows, list) or not all(
        isinstance(a, list) and len(a) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in a)
        for a in arrows
    ):
        raise QuiverSyntaxError('"arrows" must be a list of [source, target] integer pairs')
    return n, [tuple(a) for a in arrows]


def _parse_lines(text: str) -> tuple[int, list]:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise QuiverSyntaxError("empty quiver description")
    try:
        n = int(lines[0])
        arrows = []
        for ln in lines[1:]:
            s, t = ln.split()
            arrows.append((int(s), int(t)))
    except ValueError as exc:
        raise QuiverSyntaxError(f"bad line format: {exc}") from exc
    return n, arrows


def parse_quiver(text: str) -> Quiver:
    """Parse the JSON form ``{"vertices": n, "arrows": [[s, t], ...]}``.

    The line form (``n`` alone on the first line, then ``s t`` per line) is
    accepted as well.
    """
    text = text.strip()
    n, arrows = _parse_json(text) if text.startswith("{") else _parse_lines(text)
    return Quiver(n, tuple(arrows))


def load_quiver(path) -> Quiver:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read())


def dumps_quiver(q: Quiver) -> str:
    return json.dumps({"vertices": q.n, "arrows": [list(a) for a in q.arrows]})


# ---------------------------------------------------------------- analysis


def validate_arrows(n: int, arrows) -> ValidationReport:
    """Check raw data without raising; the report carries the findings."""
    arrows = [tuple(a) for a in arrows]
    connected, tree = _tree_problems(n, arrows)
    indeg = {i: 0 for i in range(1, n + 1)}
    outdeg = {i: 0 for i in range(1, n + 1)}
    for s, t in arrows:
        if s in outdeg and t in indeg:
            outdeg[s] += 1
            indeg[t] += 1
    offending = frozenset(
        i for i in indeg if indeg[i] + outdeg[i] >= 3 and indeg[i] and outdeg[i]
    )
    return ValidationReport(connected, tree, not offending, offending)


def validate(q: Quiver) -> ValidationReport:
    return validate_arrows(q.n, q.arrows)


def successors(q: Quiver, i: int) -> frozenset[int]:
    q.check_vertex(i)
    m = q.succ_mask[i - 1]
    return frozenset(j for j in q.vertices if m >> (j - 1) & 1)


def boundary_sets(q: Quiver) -> tuple[frozenset[int], frozenset[int]]:
    """Sinks and sources, and the ones among them that are not leaves."""
    return q.K, q.Kprime


def maximal_chains(q: Quiver) -> list[tuple[int, ...]]:
    """Maximal directed paths, one per reachable (source, sink) pair."""
    return list(q.chains)


def components_without(q: Quiver, s: int) -> list[frozenset[int]]:
    q.check_vertex(s)
    return list(q.components_without(s))


# ---------------------------------------------------------------- families


def _orientations(edges, n) -> Iterator[Quiver]:
    for flips in itertools.product((False, True), repeat=len(edges)):
        arrows = tuple((b, a) if f else (a, b) for (a, b), f in zip(edges, flips))
        yield Quiver(n, arrows)


def type_a_orientations(n: int) -> Iterator[Quiver]:
    """Every orientation of the path 1 - 2 - ... - n (labelled, no dedup)."""
    yield from _orientations([(i, i + 1) for i in range(1, n)], n)


def admissible_trees(n: int) -> list[Quiver]:
    """Admissible orientations of trees on exactly n vertices, up to isomorphism.

    Order is deterministic: networkx's tree order, then orientation order.
    """
    out: list[Quiver] = []
    trees = [nx.path_graph(2)] if n == 2 else list(nx.nonisomorphic_trees(n))
    for t in trees:
        edges = sorted((a + 1, b + 1) for a, b in t.edges())
        seen: list[nx.DiGraph] = []
        for q in _orientations(edges, n):
            if not q.is_admissible:
                continue
            g = q.to_networkx()
            if any(nx.is_isomorphic(g, h) for h in seen):
                continue
            seen.append(g)
            out.append(q)
    return out
