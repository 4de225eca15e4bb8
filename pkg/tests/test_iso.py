import random
from itertools import combinations

import pytest

from pocfvs import (
    Graph,
    butterfly,
    claw,
    cycle,
    hourglass,
    hourglass_chain,
    path,
    spider,
    tadpole,
)
from pocfvs.harness import enumerate_all_graphs, enumerate_connected
from pocfvs.iso import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    embeds_induced,
    find_induced_embedding,
    is_free,
    is_linear_forest,
)

from _oracles import perm_isomorphic, subset_embedding_exists


def assert_valid_embedding(pattern, host, phi):
    assert sorted(phi) == list(range(pattern.n))
    assert len(set(phi.values())) == pattern.n
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            assert pattern.has_edge(u, v) == host.has_edge(phi[u], phi[v])


def test_embedding_examples():
    phi = find_induced_embedding(path(3), cycle(5))
    assert phi is not None
    assert_valid_embedding(path(3), cycle(5), phi)
    assert find_induced_embedding(cycle(4), butterfly(3, 3, 2)) is None
    assert not subset_embedding_exists(cycle(4), butterfly(3, 3, 2))
    phi = find_induced_embedding(spider(1, 2, 4), butterfly(8, 3, 9))
    assert phi is not None
    assert_valid_embedding(spider(1, 2, 4), butterfly(8, 3, 9), phi)


def test_empty_pattern_embeds():
    assert find_induced_embedding(Graph(0), cycle(3)) == {}
    assert find_induced_embedding(Graph(0), Graph(0)) == {}


def test_is_free_examples():
    k5 = Graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    assert is_free(k5, [path(3)])
    assert is_free(cycle(5), [cycle(3), cycle(4)])
    assert is_free(hourglass_chain(2), [path(6), path(4) + path(2)])
    assert not is_free(cycle(5), [path(4)])


def test_matcher_agrees_with_subset_oracle():
    patterns = [g for n in range(1, 5) for g in enumerate_all_graphs(n)]
    patterns += [path(5), cycle(5), claw() + path(1), spider(1, 1, 2)]
    hosts = [g for n in range(1, 7) for g in enumerate_connected(n)]
    rng = random.Random(60031)
    hosts += [
        Graph(8, [(u, v) for u in range(8) for v in range(u + 1, 8) if rng.random() < 0.35])
        for _ in range(12)
    ]
    for pattern in patterns:
        for host in hosts:
            if pattern.n > host.n:
                continue
            got = find_induced_embedding(pattern, host)
            expect = subset_embedding_exists(pattern, host)
            assert (got is not None) == expect, (pattern.edges(), host.edges())
            if got is not None:
                assert_valid_embedding(pattern, host, got)


def test_mutual_embedding_means_isomorphic():
    catalog = [path(4), cycle(4), claw(), tadpole(1, 3), spider(1, 1, 2), 2 * path(2)]
    for g in catalog:
        for h in catalog:
            if embeds_induced(g, h) and embeds_induced(h, g):
                assert are_isomorphic(g, h)


def test_linear_forest():
    assert is_linear_forest(path(5) + 2 * path(1))
    assert not is_linear_forest(claw())
    assert not is_linear_forest(cycle(3))
    assert is_linear_forest(Graph(0))
    # equivalent formulation: acyclic with maximum degree at most 2
    for g in enumerate_all_graphs(5):
        assert is_linear_forest(g) == (g.is_acyclic() and g.max_degree() <= 2)


def test_canonical_form_characterizes_isomorphism_upto_6():
    # different (n, m) force different canonical edge tuples outright, so
    # only same-size buckets need the brute-force comparison
    by_bucket = {}
    for n in range(0, 7):
        for g in enumerate_all_graphs(n) if n else [Graph(0)]:
            by_bucket.setdefault((g.n, g.edge_count), []).append(g)
    total_pairs = 0
    for bucket in by_bucket.values():
        for g, h in combinations(bucket, 2):
            total_pairs += 1
            same_form = canonical_form(g) == canonical_form(h)
            assert same_form == perm_isomorphic(g, h)
        for g in bucket:
            assert canonical_form(g) == canonical_form(g)
    assert total_pairs > 1000


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(1123)
    for _ in range(120):
        n = rng.randint(1, 8)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_graph_is_isomorphic_representative():
    for g in [butterfly(3, 4, 2), hourglass(), spider(2, 2, 2), 2 * cycle(3)]:
        cg = canonical_graph(g)
        assert are_isomorphic(cg, g)
        assert canonical_form(cg) == canonical_form(g)


def test_complete_graph_canonicalization_is_fast():
    k8 = Graph(8, [(a, b) for a in range(8) for b in range(a + 1, 8)])
    assert canonical_form(k8).edges == k8.edges()


def test_matching_determinism():
    host = butterfly(6, 6, 3)
    first = find_induced_embedding(claw(), host)
    second = find_induced_embedding(claw(), host)
    assert first == second
