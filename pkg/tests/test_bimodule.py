import pytest
from conftest import A2, A3, D4, EQ6, trees_up_to
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qim import (
    Subbimodule,
    closure,
    decompose,
    enumerate_subbimodules,
    generator_J,
    generator_J_split,
    identity_bimodule,
    is_subbimodule,
    path_basis,
    product,
    support,
    zero_bimodule,
)
from qim.errors import (
    BadComponentIndex,
    BadVertexIndex,
    EnumerationBudgetExceeded,
    InvalidPathPair,
    NotSplitVertex,
    QuiverMismatch,
)


def pairs(b):
    return set(b.pairs())


def test_path_basis():
    assert path_basis(A2) == ((1, 1), (2, 1), (2, 2))
    assert path_basis(D4) == ((1, 1), (2, 1), (2, 2), (2, 3), (3, 3), (2, 4), (4, 4))
    assert len(path_basis(EQ6)) == 13
    for q in trees_up_to(5):
        assert list(path_basis(q)) == oracles.basis(q)


def test_closure_examples():
    assert pairs(closure(A2, [(1, 1)])) == {(1, 1), (2, 1)}
    assert closure(D4, []) == zero_bimodule(D4)
    assert pairs(closure(EQ6, [(4, 4)])) == {(4, 4), (3, 4), (2, 4), (5, 4), (6, 4)}
    with pytest.raises(InvalidPathPair):
        closure(A2, [(1, 2)])
    with pytest.raises(InvalidPathPair):
        closure(A2, [(3, 1)])


def test_is_subbimodule():
    assert not is_subbimodule(EQ6, [(4, 4), (5, 4)])
    assert is_subbimodule(EQ6, path_basis(EQ6))
    assert is_subbimodule(EQ6, [])
    assert not is_subbimodule(A2, [(1, 2)])


def test_product_examples():
    j1, j2 = generator_J(A2, 1), generator_J(A2, 2)
    assert pairs(j1 * j2) == {(2, 1)}
    assert not (j2 * j1)
    for b in enumerate_subbimodules(D4):
        assert b * identity_bimodule(D4) == b == identity_bimodule(D4) * b
        assert not b * zero_bimodule(D4)
    with pytest.raises(QuiverMismatch):
        product(j1, generator_J(A3, 1))


def test_generators():
    assert pairs(generator_J(A2, 1)) == {(2, 1), (2, 2)}
    assert pairs(generator_J(A2, 2)) == {(1, 1), (2, 1)}
    assert len(generator_J(EQ6, 4)) == 12
    with pytest.raises(BadVertexIndex):
        generator_J(A2, 3)
    left = generator_J_split(EQ6, 4, 1)
    right = generator_J_split(EQ6, 4, 2)
    assert pairs(left) == {(1, 1), (2, 1), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4)}
    assert pairs(right) == {(5, 4), (6, 4), (5, 5), (6, 5), (6, 6)}
    blocks = [generator_J_split(D4, 2, k) for k in (1, 2, 3)]
    # J_2 has six basis paths, two per block
    assert [pairs(b) for b in blocks] == [{(1, 1), (2, 1)}, {(2, 3), (3, 3)}, {(2, 4), (4, 4)}]
    with pytest.raises(NotSplitVertex):
        generator_J_split(D4, 1, 1)
    with pytest.raises(BadComponentIndex):
        generator_J_split(D4, 2, 4)


def test_split_blocks_partition_J():
    for q in trees_up_to(6):
        for s in q.Kprime:
            blocks = [generator_J_split(q, s, k) for k in range(1, q.degree(s) + 1)]
            total = set()
            for b in blocks:
                assert not total & pairs(b)
                total |= pairs(b)
            assert total == pairs(generator_J(q, s))


def test_decompose_examples():
    left, right = decompose(generator_J(EQ6, 4))
    assert sorted(support(left).vertices) == [1, 2, 3, 4]
    assert sorted(support(right).vertices) == [4, 5, 6]
    assert {(c[-1], c[0]) for c in EQ6.chains if (c[-1], c[0]) in left} == {(2, 1), (2, 4)}
    assert {(c[-1], c[0]) for c in EQ6.chains if (c[-1], c[0]) in right} == {(6, 4)}
    assert len(decompose(generator_J(A2, 1))) == 1
    assert len(decompose(generator_J(D4, 2))) == 3
    assert decompose(zero_bimodule(D4)) == []


def test_support_examples():
    assert support(identity_bimodule(EQ6)).vertices == set(EQ6.vertices)
    assert support(zero_bimodule(EQ6)).vertices == set()


def test_enumeration_examples():
    assert len(enumerate_subbimodules(A2)) == 5
    assert len(enumerate_subbimodules(A3)) == 14
    ideals = enumerate_subbimodules(D4)
    assert ideals[0] == zero_bimodule(D4) and ideals[-1] == identity_bimodule(D4)
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_subbimodules(D4, max_count=10)


def test_enumeration_matches_subset_oracle():
    for q in trees_up_to(4):
        got = {frozenset(b.pairs()) for b in enumerate_subbimodules(q)}
        assert got == set(oracles.all_ideals(q))


def test_enumeration_order_is_canonical():
    ideals = enumerate_subbimodules(EQ6)
    keys = [b.sort_key() for b in ideals]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_product_matches_oracle_and_is_closed():
    for q in trees_up_to(4):
        ideals = enumerate_subbimodules(q)
        for b in ideals:
            for d in ideals:
                bd = b * d
                assert pairs(bd) == oracles.mult(pairs(b), pairs(d))
                assert is_subbimodule(q, bd.pairs())


def test_product_closed_exhaustive_n6():
    for q in trees_up_to(6):
        if q.n < 6:
            continue
        ideals = enumerate_subbimodules(q)
        for b in ideals[:: max(1, len(ideals) // 40)]:
            for d in ideals:
                bd = b * d
                assert Subbimodule(q, bd.cols) == closure(q, bd.pairs())


def test_product_associative_n5():
    for q in trees_up_to(5):
        ideals = enumerate_subbimodules(q)
        sample = ideals[:: max(1, len(ideals) // 12)]
        for a in sample:
            for b in sample:
                ab = a * b
                for c in ideals:
                    assert ab * c == a * (b * c)


def test_decompose_matches_oracle():
    for q in trees_up_to(5):
        for b in enumerate_subbimodules(q):
            blocks = decompose(b)
            assert {frozenset(x.pairs()) for x in blocks} == set(oracles.components(q, pairs(b)))
            for x in blocks:
                assert decompose(x) == [x]
                assert is_subbimodule(q, x.pairs())


def test_support_matches_oracle():
    for q in trees_up_to(5):
        for b in enumerate_subbimodules(q):
            assert support(b).vertices == oracles.support_vertices(q, pairs(b))


def test_columns_are_up_sets():
    for q in trees_up_to(5):
        for b in enumerate_subbimodules(q):
            for r in q.vertices:
                col = b.column(r)
                assert col <= set(oracles.reach(q)[r])
                for t in col:
                    assert oracles.reach(q)[t] <= col


def test_serialization_roundtrip():
    for b in enumerate_subbimodules(EQ6)[::17]:
        assert Subbimodule.from_json(EQ6, b.dumps()) == b
    with pytest.raises(InvalidPathPair):
        Subbimodule.from_json(A2, {"pairs": [[1, 1]]})


@st.composite
def quiver_and_seed(draw):
    q = draw(st.sampled_from(trees_up_to(7)))
    basis = list(path_basis(q))
    seed = draw(st.sets(st.sampled_from(basis), max_size=6))
    more = draw(st.sets(st.sampled_from(basis), max_size=6))
    return q, seed, seed | more


@settings(max_examples=300, deadline=None)
@given(quiver_and_seed())
def test_closure_is_closure_operator(data):
    q, small, big = data
    c_small, c_big = closure(q, small), closure(q, big)
    assert set(small) <= pairs(c_small)
    assert c_small <= c_big
    assert closure(q, c_small.pairs()) == c_small
    assert pairs(c_small) == oracles.close(q, small)


@settings(max_examples=200, deadline=None)
@given(quiver_and_seed())
def test_bitwise_ops(data):
    q, a, b = data
    x, y = closure(q, a), closure(q, b)
    assert pairs(x & y) == pairs(x) & pairs(y)
    assert pairs(x | y) == pairs(x) | pairs(y)
    assert is_subbimodule(q, (x & y).pairs()) and is_subbimodule(q, (x | y).pairs())
