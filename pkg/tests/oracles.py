"""Slow, definition-level reference implementations used only by the tests.

Nothing here shares code with the package beyond the Quiver type.
"""

from __future__ import annotations

from itertools import combinations, product as iproduct

import networkx as nx


def reach(q):
    g = nx.DiGraph()
    g.add_nodes_from(range(1, q.n + 1))
    g.add_edges_from(q.arrows)
    return {i: {i} | nx.descendants(g, i) for i in range(1, q.n + 1)}


def basis(q):
    r = reach(q)
    return [(t, s) for s in range(1, q.n + 1) for t in sorted(r[s])]


def close(q, pairs):
    """Fixed-point iteration of the two one-arrow moves."""
    out = set(pairs)
    changed = True
    while changed:
        changed = False
        for t, s in list(out):
            for a, b in q.arrows:
                if a == t and (b, s) not in out:
                    out.add((b, s))
                    changed = True
                if b == s and (t, a) not in out:
                    out.add((t, a))
                    changed = True
    return frozenset(out)


def all_ideals(q):
    """Every closed subset of the basis, by exhaustive subset search."""
    b = basis(q)
    out = []
    for mask in range(1 << len(b)):
        s = frozenset(p for k, p in enumerate(b) if mask >> k & 1)
        if close(q, s) == s:
            out.append(s)
    return out


def mult(b, d):
    return frozenset((t, s) for t, k in b for k2, s in d if k == k2)


def components(q, pairs):
    g = nx.Graph()
    g.add_nodes_from(pairs)
    for t, s in pairs:
        for a, c in q.arrows:
            if a == t and (c, s) in pairs:
                g.add_edge((t, s), (c, s))
            if c == s and (t, a) in pairs:
                g.add_edge((t, s), (t, a))
    return [frozenset(c) for c in nx.connected_components(g)]


def chains(q):
    g = nx.DiGraph()
    g.add_nodes_from(range(1, q.n + 1))
    g.add_edges_from(q.arrows)
    srcs = [v for v in g if g.in_degree(v) == 0]
    snks = [v for v in g if g.out_degree(v) == 0]
    return [tuple(p) for s in srcs for t in snks for p in nx.all_simple_paths(g, s, t)] + [
        (v,) for v in g if g.degree(v) == 0
    ]


def support_vertices(q, pairs):
    return {v for c in chains(q) if (c[-1], c[0]) in pairs for v in c}


def is_monotone_allpairs(q, alpha):
    r = reach(q)
    a = dict(zip(range(1, q.n + 1), alpha))
    for j in r:
        for i in r[j]:
            if a[i] and (not a[j] or a[i] not in r[a[j]]):
                return False
    return True


def raw_function_support(q, alpha):
    """Union of maximal chains X = (i..j) with j in the up-set generated by alpha(i)."""
    r = reach(q)
    verts, edges = set(), set()
    for c in chains(q):
        a = alpha[c[0] - 1]
        if a and c[-1] in r[a]:
            verts.update(c)
            edges.update(zip(c, c[1:]))
    return verts, edges


def is_special(q, alpha):
    r = reach(q)
    if any(a and a not in r[i] for i, a in zip(range(1, q.n + 1), alpha)):
        return False
    if not is_monotone_allpairs(q, alpha):
        return False
    verts, edges = raw_function_support(q, alpha)
    if verts:
        g = nx.Graph()
        g.add_nodes_from(verts)
        g.add_edges_from(edges)
        if not nx.is_connected(g):
            return False
    deg_q = {v: 0 for v in range(1, q.n + 1)}
    for a, b in q.arrows:
        deg_q[a] += 1
        deg_q[b] += 1
    outs = {a for a, _ in q.arrows}
    ins = {b for _, b in q.arrows}
    K = {v for v in deg_q if v not in outs or v not in ins}
    for v in verts & K:
        if alpha[v - 1] == 0 and sum(v in e for e in edges) != 1:
            return False
    return True


def special_functions(q):
    return [a for a in iproduct(range(q.n + 1), repeat=q.n) if is_special(q, a)]


def subsets(xs):
    xs = list(xs)
    for k in range(len(xs) + 1):
        yield from combinations(xs, k)
