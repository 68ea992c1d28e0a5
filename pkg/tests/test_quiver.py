import json

import pytest
from conftest import A2, A3, D4, D4_RIGHT, EQ6, trees_up_to

import oracles
from qim import Quiver, parse_quiver, validate
from qim.errors import BadVertexIndex, NotATree, QuiverSyntaxError
from qim.quiver import (
    Subgraph,
    admissible_trees,
    boundary_sets,
    components_without,
    dumps_quiver,
    maximal_chains,
    successors,
    type_a_orientations,
)


def test_parse_json_and_lines():
    assert parse_quiver('{"vertices":2,"arrows":[[1,2]]}') == A2
    assert parse_quiver('{"vertices":4,"arrows":[[1,2],[3,2],[4,2]]}') == D4
    assert parse_quiver("4\n1 2\n# comment\n3 2\n4 2\n") == D4


@pytest.mark.parametrize(
    "text, err",
    [
        ('{"vertices":3,"arrows":[[1,2],[2,1]]}', NotATree),
        ('{"vertices":3,"arrows":[[1,2]]}', NotATree),
        ('{"vertices":2,"arrows":[[1,3]]}', BadVertexIndex),
        ('{"vertices":1,"arrows":[]}', BadVertexIndex),
        ('{"vertices":2,"arrows":[[1,1]]}', NotATree),
        ('{"vertices":2}', QuiverSyntaxError),
        ("{not json", QuiverSyntaxError),
        ("2\n1 x\n", QuiverSyntaxError),
    ],
)
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_quiver(text)


def test_roundtrip_serialization():
    for q in trees_up_to(5):
        assert parse_quiver(dumps_quiver(q)) == q
    assert json.loads(dumps_quiver(D4)) == {"vertices": 4, "arrows": [[1, 2], [3, 2], [4, 2]]}


def test_validate():
    assert validate(D4).admissible
    r = validate(D4_RIGHT)
    assert not r.admissible and r.offending_vertices == {2}
    assert validate(A2).admissible and validate(A2).tree


def test_successors():
    assert successors(D4, 1) == {1, 2}
    assert successors(D4_RIGHT, 1) == {1, 2, 3}
    assert successors(D4, 2) == {2}
    with pytest.raises(BadVertexIndex):
        successors(D4, 5)


def test_boundary_sets():
    assert boundary_sets(D4) == ({1, 2, 3, 4}, {2})
    assert boundary_sets(A3) == ({1, 3}, set())
    assert boundary_sets(EQ6) == ({1, 2, 4, 6}, {2, 4})


def test_maximal_chains():
    assert maximal_chains(D4) == [(1, 2), (3, 2), (4, 2)]
    assert maximal_chains(A3) == [(1, 2, 3)]
    assert maximal_chains(EQ6) == [(1, 2), (4, 3, 2), (4, 5, 6)]


def test_components_without():
    assert components_without(D4, 2) == [{1}, {3}, {4}]
    assert components_without(A2, 1) == [{2}]
    assert components_without(EQ6, 4) == [{1, 2, 3}, {5, 6}]


def test_reachability_matches_oracle():
    for q in trees_up_to(6):
        r = oracles.reach(q)
        for i in q.vertices:
            assert successors(q, i) == r[i]


def test_chain_and_component_invariants():
    for q in trees_up_to(6):
        chains = maximal_chains(q)
        assert sorted(chains) == sorted(oracles.chains(q))
        covered = {e for c in chains for e in zip(c, c[1:])}
        assert covered == set(q.arrows)
        for s in q.vertices:
            comps = components_without(q, s)
            assert len(comps) == q.degree(s)
            assert set().union(*comps) == set(q.vertices) - {s}
            assert sum(map(len, comps)) == q.n - 1


def test_admissible_means_big_vertices_in_K():
    for n in range(2, 6):
        for q in type_a_orientations(n):
            assert validate(q).admissible
    for q in trees_up_to(6):
        for v in q.vertices:
            if q.degree(v) >= 3:
                assert not q.in_neighbors[v] or not q.out_neighbors[v]


def test_tree_family_sizes():
    # admissible trees up to isomorphism of oriented trees
    assert [len(admissible_trees(n)) for n in range(2, 6)] == [1, 3, 6, 16]
    assert len(list(type_a_orientations(4))) == 8


def test_subgraph_ops():
    a = Subgraph.full(EQ6, {1, 2, 3})
    b = Subgraph.full(EQ6, {2, 3, 4})
    assert (a & b).vertices == {2, 3}
    assert (a | b).edges == {(1, 2), (3, 2), (4, 3)}
    assert a.is_connected() and not Subgraph.full(EQ6, {1, 3}).is_connected()
    assert a.degree(2) == 2
    assert Subgraph().to_json() == {"vertices": [], "edges": []}


def test_quiver_is_hashable_and_ordered():
    assert Quiver(2, ((1, 2),)) == A2
    assert hash(Quiver(3, ((2, 3), (1, 2)))) == hash(A3)
