"""
列车、入度序列、p 向量与列车摘要测试
"""

import networkx as nx
import numpy as np
import pytest

from src.core.catalogue import parse_line
from src.core.errors import FactorError
from src.core.factorisation import Factorisation, make_F1_F2
from src.core.invariants import (
    build_train,
    indegree_sequence,
    p_vector,
    path_lengths,
    train_canonical_hash,
)
from src.core.search import brute_force_classes
from tests.conftest import random_perm

FIRST_TRIPLE = [573, 784, 336, 86, 19, 2]
SECOND_TRIPLE = [584, 765, 338, 94, 18, 1]


def _affine_k8() -> Factorisation:
    return Factorisation.from_partners([tuple(v ^ d for v in range(8)) for d in range(1, 8)])


def _digraph(train) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(train.vertex_count))
    graph.add_edges_from((v, int(w)) for v, w in enumerate(train.succ))
    return graph


def test_train_shape(rigid):
    train = build_train(rigid)
    assert train.vertex_count == 120 * 15
    assert len(train.loops) == 120
    assert int(train.indegrees.sum()) == train.vertex_count
    edge, factor = train.decode(train.loops[0])
    assert rigid.owner[edge.lo, edge.hi] == factor


def test_successor_definition(k6):
    train = build_train(k6)
    # 边 cd 的编号为 9
    for factor in range(5):
        v = train.vertex(9, factor)
        edge, f = train.decode(v)
        assert (edge.lo, edge.hi, f) == (2, 3, factor)
        partner = k6.factors[factor].partner
        target_edge, target_factor = train.decode(train.succ[v])
        assert (target_edge.lo, target_edge.hi) == tuple(sorted((partner[2], partner[3])))
        assert target_factor == k6.owner[2, 3]


def test_train_requires_factorisation():
    f1, f2 = make_F1_F2(6)
    with pytest.raises(FactorError):
        build_train(Factorisation(6, (f1, f2)))


@pytest.mark.parametrize("name, expected", [
    ("indegree_triple_1a", FIRST_TRIPLE),
    ("indegree_triple_1b", FIRST_TRIPLE),
    ("indegree_triple_1c", FIRST_TRIPLE),
    ("indegree_triple_2a", SECOND_TRIPLE),
    ("indegree_triple_2b", SECOND_TRIPLE),
    ("indegree_triple_2c", SECOND_TRIPLE),
    ("rigid_order2_collision", [598, 748, 332, 102, 18, 2]),
])
def test_printed_indegree_sequences(printed, name, expected):
    assert indegree_sequence(build_train(printed[name])).as_list() == expected


def test_printed_p_vector_pair(printed):
    a = p_vector(build_train(printed["p_vector_pair_a"]))
    b = p_vector(build_train(printed["p_vector_pair_b"]))
    assert a.as_list() == [139, 19, 15, 14, 17, 17]
    assert b.as_list() == [139, 19, 15, 14, 17, 22]
    assert a.counts[:5] == b.counts[:5]


def test_p_vector_truncation(rigid):
    train = build_train(rigid)
    full = p_vector(train, max_i=8).as_list()
    assert p_vector(train, max_i=3).as_list() == full[:4]
    with pytest.raises(ValueError):
        p_vector(train, max_i=-1)


def test_path_lengths_by_direct_walk(k8_nonperfect):
    train = build_train(k8_nonperfect)
    p = path_lengths(train)
    succ = train.succ.tolist()
    for v in range(train.vertex_count):
        seen = []
        w = v
        while w not in seen:
            seen.append(w)
            w = succ[w]
        # 第一次重复出现的顶点是圈的入口
        assert p[v] == seen.index(w)


def test_hash_is_relabel_invariant(rng, printed):
    for name in ("indegree_triple_1a", "p_vector_pair_a"):
        factorisation = printed[name]
        relabelled = factorisation.relabel(random_perm(16, rng))
        assert train_canonical_hash(build_train(factorisation)) == train_canonical_hash(build_train(relabelled))


def test_hash_separates_p_vector_pair(printed):
    a = train_canonical_hash(build_train(printed["p_vector_pair_a"]))
    b = train_canonical_hash(build_train(printed["p_vector_pair_b"]))
    assert a != b
    assert len(a) == 32


def test_hash_agrees_with_graph_isomorphism(rng, k8_nonperfect):
    p1f = parse_line(brute_force_classes(8)[0])
    samples = [p1f, p1f.relabel(random_perm(8, rng)), k8_nonperfect,
               k8_nonperfect.relabel(random_perm(8, rng)), _affine_k8()]
    trains = [build_train(f) for f in samples]
    hashes = [train_canonical_hash(t) for t in trains]
    graphs = [_digraph(t) for t in trains]
    for i in range(len(samples)):
        for j in range(i + 1, len(samples)):
            assert (hashes[i] == hashes[j]) == nx.is_isomorphic(graphs[i], graphs[j])
    assert hashes[0] == hashes[1]
    assert hashes[2] == hashes[3]


def test_indegree_tallies_cover_all_vertices(k6):
    train = build_train(k6)
    tallies = indegree_sequence(train).as_list()
    assert sum(tallies) == train.vertex_count
    assert sum(i * t for i, t in enumerate(tallies)) == train.vertex_count
    assert np.array_equal(np.sort(train.loops), train.loops)
