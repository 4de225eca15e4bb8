import pytest

from pocfvs import (
    Graph,
    InvalidInputError,
    butterfly,
    claw,
    cycle,
    hourglass,
    path,
    spider,
    tadpole,
)
from pocfvs.cover import (
    CoverContext,
    LF_D,
    LF_DD,
    LF_DT,
    LF_T,
    LF_TT,
    LINEAR_FOREST,
    NOT_BUTTERFLY,
    PairSet,
    classify_pair,
    covered_pairs,
    covers_bruteforce,
    family_covers_all,
    must_contain_check,
    render_pair_table,
    structure_profile,
)
from pocfvs.iso import are_isomorphic, embeds_induced
from pocfvs.verification import oracle_catalog


def test_cover_context():
    assert CoverContext.for_graph(path(4)).N == 9
    assert CoverContext.for_graphs([path(4), cycle(6)]).N == 13
    assert CoverContext.for_graphs([]).N == 3
    with pytest.raises(InvalidInputError):
        CoverContext(4)


def test_covers_bruteforce_examples():
    assert covers_bruteforce(path(4), 3, 7)
    assert not covers_bruteforce(cycle(3), 4, 4)
    assert not covers_bruteforce(claw(), 3, 3)
    with pytest.raises(InvalidInputError):
        covers_bruteforce(path(3), 2, 5)


def test_structure_profiles():
    prof = structure_profile(path(2) + tadpole(3, 5))
    assert prof.kind == LF_D
    assert prof.tadpoles == ((3, 5),)
    assert prof.linear_forest == (2,)

    prof = structure_profile(2 * claw())
    assert prof.kind == LF_TT
    assert prof.spiders == ((1, 1, 1), (1, 1, 1))
    assert prof.linear_forest == ()

    assert structure_profile(hourglass()).kind == NOT_BUTTERFLY
    assert structure_profile(path(5) + 2 * path(1)).kind == LINEAR_FOREST
    assert structure_profile(Graph(0)).kind == LINEAR_FOREST
    assert structure_profile(cycle(3) + cycle(4)).kind == LF_DD
    assert structure_profile(cycle(3) + claw()).kind == LF_DT
    assert structure_profile(spider(1, 2, 4)).kind == LF_T
    assert structure_profile(butterfly(3, 3, 1)).kind == NOT_BUTTERFLY
    assert structure_profile(3 * cycle(3)).kind == NOT_BUTTERFLY


def test_profile_reassembly_matches_input():
    for name, h in oracle_catalog():
        prof = structure_profile(h)
        if prof.kind == NOT_BUTTERFLY:
            continue
        assert are_isomorphic(prof.reassemble(), h), name


def test_pairset_primitives():
    row = PairSet(frozenset({("row", 5)}))
    assert row.contains(5, 11) and row.contains(3, 5)
    assert not row.contains(4, 6)
    cells = PairSet(frozenset({("cells", 3, 4)}))
    assert cells.contains(3, 4) and cells.contains(4, 3)
    assert not cells.contains(3, 3)
    rowtail = PairSet(frozenset({("rowtail", 5, 4)}))
    assert rowtail.contains(5, 4) and rowtail.contains(12, 5) and rowtail.contains(5, 5)
    assert not rowtail.contains(5, 3) and not rowtail.contains(6, 7)
    minmax = PairSet(frozenset({("minmax", 4, 6)}))
    assert minmax.contains(4, 6) and minmax.contains(7, 7)
    assert not minmax.contains(3, 9) and not minmax.contains(4, 5)
    assert PairSet.universe().is_universal()
    assert not PairSet.empty().is_universal()
    assert PairSet.empty().first_uncovered() == (3, 3)
    with pytest.raises(InvalidInputError):
        row.contains(2, 3)


def test_pairset_union_and_bound():
    u = PairSet(frozenset({("row", 3)})).union(PairSet(frozenset({("minmax", 4, 4)})))
    assert u.is_universal()
    assert u.test_bound() >= 5
    partial = PairSet(frozenset({("row", 3)})).union(PairSet(frozenset({("maxge", 6)})))
    assert partial.first_uncovered() == (4, 4)


def test_covered_pairs_examples():
    assert covered_pairs(path(6)).regions == frozenset({("all",)})
    ps = covered_pairs(cycle(3) + claw())
    assert ps.contains(3, 4) and ps.contains(4, 3) and ps.contains(12, 3)
    assert not ps.contains(3, 3) and not ps.contains(4, 4)
    # leg normalization: the long leg rides the bridge, so only the two
    # shortest legs of each spider constrain the cycles
    two_spiders = claw() + spider(1, 2, 2)
    ps = covered_pairs(two_spiders)
    assert ps.contains(4, 5)
    assert covers_bruteforce(two_spiders, 4, 5)
    assert not ps.contains(4, 4)
    assert not covers_bruteforce(two_spiders, 4, 4)


def test_pairset_symmetry_against_bruteforce():
    for _, h in oracle_catalog()[:8]:
        for i in range(3, 8):
            for j in range(i, 8):
                assert covers_bruteforce(h, i, j) == covers_bruteforce(h, j, i)


def test_context_monotonicity():
    # a small pattern embeds in a longer-bridge butterfly exactly when it
    # embeds in the shorter one, once the bridge is at least its order
    patterns = [path(4), claw(), cycle(3), path(2) + path(1)]
    for h in patterns:
        for i, j in ((3, 4), (4, 5)):
            base = None
            for k in range(max(1, h.n), 10):
                now = embeds_induced(h, butterfly(i, j, k))
                if base is None:
                    base = now
                assert now == base


def test_family_context_agrees_with_member_context():
    family = [cycle(3), 2 * claw()]
    ctx = CoverContext.for_graphs(family)
    for h in family:
        for i in range(3, 9):
            for j in range(3, 9):
                assert covers_bruteforce(h, i, j) == covers_bruteforce(h, i, j, context=ctx)


def test_family_covers_all():
    assert family_covers_all([path(4)]).bounded
    res = family_covers_all([cycle(3)])
    assert not res.bounded
    assert res.uncovered_pair == (4, 4)
    assert family_covers_all([cycle(3), 2 * spider(2, 1, 1)]).bounded
    with pytest.raises(InvalidInputError):
        family_covers_all([])


def test_single_member_boundedness_is_linear_forest():
    from pocfvs.iso import is_linear_forest

    for _, h in oracle_catalog():
        assert family_covers_all([h]).bounded == is_linear_forest(h)


def test_must_contain_check():
    rep = must_contain_check([path(4)])
    assert rep.applicable and rep.double_tadpole_member == 0 and rep.double_spider_member == 0
    rep = must_contain_check([cycle(3), 2 * claw()])
    assert rep.applicable
    rep = must_contain_check([cycle(3)])
    assert not rep.applicable and not rep.bounded


def test_classify_pair_bullets():
    res = classify_pair(path(5), cycle(7))
    assert res.bounded and "linear forest" in res.reason
    res = classify_pair(tadpole(1, 3), 2 * spider(3, 1, 1))
    assert res.bounded and "double short-leg spider" in res.reason
    res = classify_pair(2 * tadpole(1, 3), spider(2, 1, 1))
    assert res.bounded and "double triangle tadpole" in res.reason
    res = classify_pair(cycle(4), claw())
    assert not res.bounded
    assert res.uncovered_pair == (3, 3)
    assert not covers_bruteforce(cycle(4), 3, 3)
    assert not covers_bruteforce(claw(), 3, 3)


def test_render_pair_table():
    text = render_pair_table(covered_pairs(path(6)), 3, 5)
    lines = text.splitlines()
    assert len(lines) == 4
    assert text.count("✓") == 9
    text = render_pair_table(covered_pairs(cycle(3)), 3, 5)
    assert "·" in text and "✓" in text
    with pytest.raises(InvalidInputError):
        render_pair_table(PairSet.empty(), 2, 5)
