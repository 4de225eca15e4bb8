import json
from fractions import Fraction
from itertools import combinations

import pytest

from pocfvs import (
    Graph,
    InvalidInputError,
    ResourceLimitError,
    butterfly,
    claw,
    cycle,
    gprime_experiment,
    hourglass,
    path,
    tadpole,
)
from pocfvs import graph6 as g6mod
from pocfvs.graph6 import decode, encode, read_file
from pocfvs.harness import (
    EnumerationSpec,
    enumerate_all_graphs,
    enumerate_connected,
    enumerate_connected_upto,
    evaluate_graphs,
    max_poc,
    tetrachotomy_classify,
    unboundedness_witnesses,
)
from pocfvs.iso import are_isomorphic, canonical_form, canonical_graph, is_free
from pocfvs.solvers import min_cfvs, min_fvs

from _oracles import dfs_is_acyclic, edge_set, perm_isomorphic, reachable


def test_enumeration_counts_naive_crosscheck_small():
    # independent route: all labeled graphs, connectivity by BFS, classes
    # by permutation isomorphism
    for n in range(1, 6):
        slots = list(combinations(range(n), 2))
        classes: list[Graph] = []
        for mask in range(1 << len(slots)):
            edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
            if len(reachable(n, set(edges), 0)) != n:
                continue
            g = Graph(n, edges)
            if not any(perm_isomorphic(g, h) for h in classes):
                classes.append(g)
        assert len(enumerate_connected(n)) == len(classes)


def test_enumeration_counts_published():
    expected = {3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
    for n, count in expected.items():
        assert len(enumerate_connected(n)) == count


def test_enumeration_examples():
    three = enumerate_connected(3)
    assert len(three) == 2
    assert any(are_isomorphic(g, path(3)) for g in three)
    assert any(are_isomorphic(g, cycle(3)) for g in three)
    p3_free = enumerate_connected(5, forbidden=(path(3),))
    assert len(p3_free) == 1
    assert p3_free[0].is_complete()


def test_enumeration_unique_and_connected():
    seen = set()
    for g in enumerate_connected(6):
        assert g.is_connected()
        key = canonical_form(g).key
        assert key not in seen
        seen.add(key)


def test_pruned_enumeration_matches_postfilter():
    pruned = enumerate_connected(6, forbidden=(claw(),))
    filtered = [g for g in enumerate_connected(6) if is_free(g, [claw()])]
    assert len(pruned) == len(filtered)
    assert {canonical_form(g).key for g in pruned} == {
        canonical_form(g).key for g in filtered
    }


def test_enumeration_limits():
    with pytest.raises(ResourceLimitError):
        enumerate_connected(10)
    with pytest.raises(InvalidInputError):
        enumerate_connected(0)
    with pytest.raises(ResourceLimitError):
        EnumerationSpec(n_max=12)
    with pytest.raises(InvalidInputError):
        EnumerationSpec(n_max=0)


def test_enumerate_all_graphs_counts():
    assert len(enumerate_all_graphs(4)) == 11
    assert len(enumerate_all_graphs(5)) == 34


def test_max_poc_report():
    report = max_poc(EnumerationSpec(n_max=6))
    assert report.max_difference >= 1
    assert report.max_ratio >= Fraction(3, 2)
    # aggregates equal the fold over records
    best = max((r.ratio for r in report.records if r.ratio is not None))
    assert report.max_ratio == best
    assert report.forest_count == sum(1 for r in report.records if r.ratio is None)
    k33 = Graph(6, [(a, 3 + b) for a in range(3) for b in range(3)])
    gid = encode(canonical_graph(k33))
    diffs = {r.graph_id: r.difference for r in report.records}
    assert diffs[gid] == 1


def test_max_poc_p3_free_all_equal():
    report = max_poc(EnumerationSpec(n_max=7, forbidden=(path(3),)))
    assert all(r.ratio in (None, Fraction(1)) for r in report.records)
    assert report.max_difference == 0


def test_report_serialization_stable():
    report = max_poc(EnumerationSpec(n_max=4))
    blob = report.to_json()
    again = max_poc(EnumerationSpec(n_max=4)).to_json()
    assert blob == again
    payload = json.loads(blob)
    assert payload["record_count"] == len(report.records)
    assert "generated_at" not in payload
    stamped = json.loads(report.to_json(timestamp="now"))
    assert stamped["generated_at"] == "now"
    text = report.to_text()
    assert "max ratio" in text


def test_tetrachotomy_spot_checks():
    assert tetrachotomy_classify(path(3)).verdict == "class-i"
    assert tetrachotomy_classify(2 * path(3)).verdict == "class-ii"
    assert tetrachotomy_classify(path(5)).verdict == "class-ii"
    assert tetrachotomy_classify(path(6)).verdict == "class-iii"
    assert tetrachotomy_classify(claw()).verdict == "class-iv"
    res = tetrachotomy_classify(path(5))
    assert res.constant == 3
    res = tetrachotomy_classify(2 * path(3))
    assert res.constant == 42


def test_unboundedness_witnesses_triangle():
    wits = unboundedness_witnesses(cycle(3), 3)
    assert len(wits) == 3
    for idx, (b, f, c) in enumerate(wits, start=1):
        assert is_free(b, [cycle(3)])
        assert f == 2
        assert c == idx + 1
        assert c - f == idx - 1
    # butterfly on the uncovered pair (4, 4)
    assert are_isomorphic(wits[0][0], butterfly(4, 4, 1))


def test_unboundedness_witnesses_p6():
    wits = unboundedness_witnesses(path(6), 2)
    assert [(f, c) for _, f, c in wits] == [(2, 3), (3, 5)]


def test_unboundedness_witnesses_none_for_low_classes():
    assert unboundedness_witnesses(path(3), 3) == []
    assert unboundedness_witnesses(2 * path(3), 3) == []


def test_gprime_experiment():
    report = gprime_experiment(2)
    assert [row.fvs for row in report.rows] == [2, 2]
    assert report.rows[0].cfvs < report.rows[1].cfvs
    assert all(row.butterfly_free for row in report.rows)
    assert "butterfly-free" in report.to_text()


def test_graph6_known_encoding():
    assert encode(cycle(3)) == "Bw"
    assert decode("Bw") == cycle(3)


def test_graph6_roundtrip():
    for n in range(1, 6):
        for g in enumerate_connected(n):
            assert decode(encode(g)) == g
    for g in [Graph(0), butterfly(4, 5, 3), hourglass(), tadpole(3, 4)]:
        assert decode(encode(g)) == g


def test_graph6_header_and_errors(tmp_path):
    assert decode(">>graph6<<Bw") == cycle(3)
    with pytest.raises(InvalidInputError):
        decode("")
    with pytest.raises(InvalidInputError):
        decode("~???")
    with pytest.raises(InvalidInputError):
        decode("B")
    with pytest.raises(InvalidInputError):
        encode(Graph(63))
    corpus = tmp_path / "graphs.g6"
    corpus.write_text(">>graph6<<\n" + encode(cycle(4)) + "\n" + encode(path(2)) + "\n")
    graphs = read_file(str(corpus))
    assert len(graphs) == 2
    assert graphs[0] == cycle(4)


def test_evaluate_graphs_skips_disconnected():
    report = evaluate_graphs([cycle(3), path(2) + path(2)], "mixed")
    assert len(report.records) == 1


def test_harness_connected_invariants_small():
    for g in enumerate_connected_upto(6):
        f = min_fvs(g).optimum
        c = min_cfvs(g).optimum
        assert f <= c
        if g.is_cycle_graph() or f == 0 or g.is_complete():
            assert f == c
        assert dfs_is_acyclic(g.n, edge_set(g)) == (f == 0)
