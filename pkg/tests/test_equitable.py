from fractions import Fraction

import pytest
from hypothesis import given, settings

from mainspectra import (
    cycle,
    is_equitable,
    main_bound,
    main_eigenvalue_count,
    path,
    quotient_matrix,
    refine_to_equitable,
    t_lambda_tree,
    valency_partition,
)

from conftest import graphs


def test_valency_partition_examples():
    t2 = t_lambda_tree(2)
    blocks = valency_partition(t2)
    assert [len(b) for b in blocks] == [3, 3, 1]
    assert blocks[2] == (0,)  # the centre has the top valency
    assert valency_partition(cycle(6)) == (tuple(range(6)),)
    assert valency_partition(path(4)) == ((0, 3), (1, 2))


def test_is_equitable_examples():
    t2 = t_lambda_tree(2)
    assert is_equitable(t2, valency_partition(t2))
    assert is_equitable(path(4), valency_partition(path(4)))
    assert not is_equitable(path(5), valency_partition(path(5)))


def test_partition_validation():
    with pytest.raises(ValueError):
        is_equitable(path(3), [(0, 1)])
    with pytest.raises(ValueError):
        is_equitable(path(3), [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        is_equitable(path(3), [(0, 1, 2), ()])


def test_refine_p5():
    blocks = refine_to_equitable(path(5), valency_partition(path(5)))
    assert set(map(frozenset, blocks)) == {
        frozenset({0, 4}),
        frozenset({1, 3}),
        frozenset({2}),
    }
    assert is_equitable(path(5), blocks)


def test_refine_idempotent_and_trivial():
    p5 = path(5)
    once = refine_to_equitable(p5, valency_partition(p5))
    assert refine_to_equitable(p5, once) == once
    assert refine_to_equitable(cycle(6), [tuple(range(6))]) == (tuple(range(6)),)


def test_quotient_examples():
    t2 = t_lambda_tree(2)
    q = quotient_matrix(t2, valency_partition(t2))
    assert [[int(x) for x in row] for row in q.entries] == [
        [0, 1, 0],
        [1, 0, 1],
        [0, 3, 0],
    ]
    q4 = quotient_matrix(path(4), valency_partition(path(4)))
    assert [[int(x) for x in row] for row in q4.entries] == [[0, 1], [1, 1]]
    qc = quotient_matrix(cycle(4), [tuple(range(4))])
    assert qc.entries == ((Fraction(2),),)


def test_quotient_json():
    q = quotient_matrix(path(4), valency_partition(path(4)))
    assert q.to_json() == {"block_sizes": [2, 2], "entries": [[0, 1], [1, 1]]}


def test_main_bound_examples():
    t2 = t_lambda_tree(2)
    assert main_bound(t2, valency_partition(t2)) == 3
    assert main_eigenvalue_count(t2) == 2
    assert main_bound(path(4), valency_partition(path(4))) == 2
    assert main_bound(cycle(4), [tuple(range(4))]) == 1
    with pytest.raises(ValueError):
        main_bound(path(5), valency_partition(path(5)))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_quotient_edge_count_symmetry(g):
    blocks = valency_partition(g)
    q = quotient_matrix(g, blocks)
    t = len(blocks)
    for i in range(t):
        for j in range(t):
            assert q.block_sizes[i] * q.entries[i][j] == q.block_sizes[j] * q.entries[j][i]


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_refinement_refines_and_is_equitable(g):
    blocks = refine_to_equitable(g, valency_partition(g))
    assert is_equitable(g, blocks)
    assert refine_to_equitable(g, blocks) == blocks
    # every refined block sits inside one valency class
    degs = {v: g.degree(v) for v in range(g.n)}
    for b in blocks:
        assert len({degs[v] for v in b}) == 1


def test_quotient_bound_on_corpus(connected_n_le_8):
    # equitable refinement of the valency partition bounds the main count
    for g in connected_n_le_8:
        blocks = refine_to_equitable(g, valency_partition(g))
        assert main_eigenvalue_count(g) <= main_bound(g, blocks)
