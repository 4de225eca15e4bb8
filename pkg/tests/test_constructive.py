import json

import pytest

from pocfvs import (
    ContradictionError,
    Graph,
    InvalidInputError,
    butterfly,
    complete_bipartite,
    cycle,
    path,
    spider,
    tadpole,
)
from pocfvs.constructive import (
    ProcedureTrace,
    connectify_by_paths,
    connectify_p5sp1,
    connectify_sp3,
    move_step,
)
from pocfvs.harness import enumerate_connected
from pocfvs.iso import find_induced_embedding, is_free
from pocfvs.solvers import is_cfvs, is_fvs, min_fvs


def test_paths_on_butterfly():
    b = butterfly(3, 3, 4)
    hubs = set(b.vertices_with_degree(3))
    result, trace = connectify_by_paths(b, hubs)
    assert is_cfvs(b, result)
    assert len(result) == 5
    assert len(result) <= trace.claimed_bound


def test_paths_on_complete_bipartite():
    g = complete_bipartite(3, 4)
    seed = min_fvs(g).witness
    result, trace = connectify_by_paths(g, seed)
    assert is_cfvs(g, result)
    assert len(result) <= len(seed) + (len(seed) - 1) * (g.diameter() - 1)
    assert len(result) <= 3


def test_paths_trivial_cases():
    c = cycle(5)
    result, _ = connectify_by_paths(c, {2})
    assert result == frozenset({2})
    result, _ = connectify_by_paths(path(4), set())
    assert result == frozenset()


def test_paths_errors():
    with pytest.raises(InvalidInputError):
        connectify_by_paths(butterfly(3, 3, 2), {0})  # not an FVS
    with pytest.raises(InvalidInputError):
        connectify_by_paths(path(2) + path(2), set())


def test_p5sp1_examples():
    g = complete_bipartite(3, 4)
    result, trace = connectify_p5sp1(g, 0)
    assert is_cfvs(g, result)
    assert len(result) <= min_fvs(g).optimum + 3
    result, _ = connectify_p5sp1(cycle(4), 0)
    assert is_cfvs(cycle(4), result)
    assert len(result) <= 4


def test_p5sp1_with_isolated_budget():
    # C_7 contains an induced P_5 but no P_5 + P_1, exercising the
    # independent-set branch
    c7 = cycle(7)
    assert not is_free(c7, [path(5)])
    assert is_free(c7, [path(5) + path(1)])
    result, trace = connectify_p5sp1(c7, 1)
    assert is_cfvs(c7, result)
    assert len(result) <= min_fvs(c7).optimum + 3 * 1 + 10
    stages = [step.stage for step in trace.steps]
    assert "p5-and-independents" in stages


def test_p5sp1_exhaustive_with_one_isolated():
    # every connected (P_5 + P_1)-free graph up to 7 vertices, covering
    # both the dominating-clique branch and the independent-set branch
    pattern = path(5) + path(1)
    p5_branch = 0
    for n in range(1, 8):
        for g in enumerate_connected(n, forbidden=(pattern,)):
            result, trace = connectify_p5sp1(g, 1)
            assert is_cfvs(g, result)
            assert len(result) <= min_fvs(g).optimum + 13
            if any(step.stage == "p5-and-independents" for step in trace.steps):
                p5_branch += 1
    assert p5_branch > 0


def test_p5sp1_errors():
    with pytest.raises(InvalidInputError):
        connectify_p5sp1(path(6), 0)  # contains an induced P_5
    with pytest.raises(InvalidInputError):
        connectify_p5sp1(path(2) + path(2), 0)
    with pytest.raises(InvalidInputError):
        connectify_p5sp1(cycle(4), -1)


def test_p5sp1_acyclic_shortcut():
    result, _ = connectify_p5sp1(spider(1, 1, 2), 0)
    assert result == frozenset()


def test_move_step_noop_when_u_untouched():
    # the tail of the tadpole induces a P_3 and is the whole seed
    g = tadpole(3, 3)
    seed = {3, 4, 5}
    z = frozenset(seed)
    result, _ = move_step(g, seed, z, set(), 2)
    assert result == frozenset(seed)
    # a u-vertex with no seed component to touch changes nothing either
    result, _ = move_step(g, seed, z, {1}, 2)
    assert result == frozenset(seed)


def test_move_step_preconditions():
    g = cycle(6)
    with pytest.raises(InvalidInputError):
        move_step(g, {0, 1}, frozenset({0}), {3}, 2)  # z not a component
    with pytest.raises(InvalidInputError):
        move_step(g, {0, 1}, frozenset({0, 1}), {1}, 2)  # u meets seed
    with pytest.raises(InvalidInputError):
        move_step(g, {0}, frozenset({0}), {2, 3}, 2)  # u not independent
    with pytest.raises(InvalidInputError):
        move_step(path(3) + path(3), {0}, frozenset({0}), set(), 2)


def test_move_step_exhaustive_small():
    # every 2P_3-free connected graph whose seed has a path-bearing hub
    # component; u is the greedy maximal independent set off the seed
    pattern = 2 * path(3)
    p3 = path(3)
    ran = 0
    for n in range(4, 8):
        for g in enumerate_connected(n, forbidden=(pattern,)):
            hit = find_induced_embedding(p3, g)
            if hit is None:
                continue
            seed = set(min_fvs(g).witness) | set(hit.values())
            comps = _seed_components(g, seed)
            z = next(
                (
                    c
                    for c in comps
                    if find_induced_embedding(p3, g.induced_subgraph(c)[0]) is not None
                ),
                None,
            )
            if z is None:
                continue
            taken = 0
            u = []
            for v in range(g.n):
                if v in seed or (g.mask(v) & taken):
                    continue
                u.append(v)
                taken |= 1 << v
            result, trace = move_step(g, seed, z, u, 2)
            ran += 1
            assert seed <= result
            assert len(result) <= len(seed) + 2
    assert ran > 200


def _seed_components(g, members):
    from pocfvs.graph import iter_bits

    mask = sum(1 << v for v in members)
    return [frozenset(iter_bits(m)) for m in g.mask_components(mask)]


def test_sp3_complete_graphs():
    for n in range(1, 7):
        kn = Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])
        result, trace = connectify_sp3(kn, 1)
        assert len(result) == min_fvs(kn).optimum
        assert is_cfvs(kn, result)


def test_sp3_on_bipartite():
    g = complete_bipartite(3, 4)
    assert is_free(g, [2 * path(3)])
    result, trace = connectify_sp3(g, 2)
    assert is_cfvs(g, result)
    assert len(result) <= min_fvs(g).optimum + 42


def test_sp3_recursion_branch():
    # complete graphs are P_3-free, so s=2 falls through to the base case
    k5 = Graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    result, trace = connectify_sp3(k5, 2)
    assert len(result) == 3
    assert any(step.stage == "recurse" for step in trace.steps)


def test_sp3_errors():
    with pytest.raises(InvalidInputError):
        connectify_sp3(3 * path(3), 2)  # disconnected
    with pytest.raises(InvalidInputError):
        connectify_sp3(cycle(3), 0)
    g = path(3) + path(3)
    g2 = Graph(g.n + 1, g.edges() + tuple((v, g.n) for v in range(g.n)))
    # g2 is connected and contains 2P_3; the s=2 precondition must fail
    with pytest.raises(InvalidInputError):
        connectify_sp3(g2, 2)


def test_sp3_trace_audit():
    g = complete_bipartite(3, 4)
    result, trace = connectify_sp3(g, 2)
    for checkpoint in trace.fvs_checkpoints:
        assert is_fvs(g, checkpoint)
    payload = json.loads(trace.to_json())
    assert payload["procedure"] == "connectify-sp3"
    assert payload["result_size"] == len(result)
    assert payload["claimed_bound"] == trace.claimed_bound


def test_trace_swap_validation():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
    trace = ProcedureTrace("test", g.n)
    trace.record_swap(g, 2, 1)  # N[2] = {1,2,3} within N[1] = {0,1,2,3}
    assert trace.swaps[0]["closed_neighborhood_contained"]
    with pytest.raises(ContradictionError):
        trace.record_swap(g, 1, 2)


def test_trace_bound_violation():
    trace = ProcedureTrace("test", 3)
    with pytest.raises(ContradictionError):
        trace.finish((0, 1, 2), 2)


def test_trace_checkpoint_rejects_non_fvs():
    trace = ProcedureTrace("test", 3)
    with pytest.raises(ContradictionError):
        trace.checkpoint(cycle(3), (), "bad")


# graphs found by randomized search that drive the rarer pipeline stages;
# at n <= 8 these stages never fire, so they are pinned here explicitly
SWAP_CASES = [("HKcKJ_O", 2), ("JG`_CkHCOn?", 2), ("Hz?x@Wo", 2),
              ("M?OP?A[?PP@MO?c_?", 3), ("J_FOO_?CXo?", 3)]
SECOND_COVER_CASES = [("Ic@~?PHAW", 2), ("J_OGAb_G?N?", 2)]
ABSORB_CASES = [("KOHs[?P@Bo?C", 3)]


def _run_pinned(code, s):
    from pocfvs.graph6 import decode

    g = decode(code)
    result, trace = connectify_sp3(g, s)
    assert is_cfvs(g, result)
    bound = 0 if s == 1 else 12 * s * s - 2 * s - 2
    assert len(result) <= min_fvs(g).optimum + bound
    for checkpoint in trace.fvs_checkpoints:
        assert is_fvs(g, checkpoint)
    return trace


@pytest.mark.parametrize("code,s", SWAP_CASES)
def test_sp3_swap_stage(code, s):
    trace = _run_pinned(code, s)
    assert trace.swaps
    for swap in trace.swaps:
        assert swap["closed_neighborhood_contained"]


@pytest.mark.parametrize("code,s", SECOND_COVER_CASES)
def test_sp3_second_cover_stage(code, s):
    trace = _run_pinned(code, s)
    assert any(step.stage == "move-u2" and step.sets.get("u2") for step in trace.steps)


@pytest.mark.parametrize("code,s", ABSORB_CASES)
def test_sp3_absorb_stage(code, s):
    trace = _run_pinned(code, s)
    assert any(step.stage == "absorb-outside" for step in trace.steps)
