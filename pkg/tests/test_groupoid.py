import pytest

from conwaygroupoids.designs import (
    boolean_system,
    pairs_hypergraph,
    pg23,
    quadratic_system,
    symplectic_system,
)
from conwaygroupoids.groupoid import (
    brute_force_groupoid,
    build_groupoid,
    classify,
    closed_triangle_moves_trivial,
    design_law_report,
    distinct_elementary_moves,
    elementary_move,
    groupoid_group_closure,
    groupoid_is_group,
    is_3_transposition_family,
    move,
    verify_base_independence,
)
from conwaygroupoids.perms import Permutation


def test_elementary_move_identity_and_involution():
    h = pg23()
    assert elementary_move(h, 5, 5).is_identity()
    for a, b in [(0, 1), (3, 7), (11, 12)]:
        m = elementary_move(h, a, b)
        assert (m * m).is_identity()
        assert m == elementary_move(h, b, a)
        assert m(a) == b and m(b) == a


def test_elementary_move_on_the_plane_is_a_double_transposition():
    h = pg23()
    for block in h.blocks:
        a, b, c, d = block
        m = elementary_move(h, a, b)
        assert m(c) == d and m(d) == c
        assert len(m.support()) == 4  # single line through each pair


def test_elementary_move_boolean_is_translation():
    h = boolean_system(2)
    m = elementary_move(h, 0, 1)
    assert m.images == (1, 0, 3, 2)
    # in any boolean system [a,b] is the translation x -> x + a + b
    h3 = boolean_system(3)
    for a, b in [(0, 5), (2, 7)]:
        m = elementary_move(h3, a, b)
        assert all(m(x) == x ^ a ^ b for x in range(8))


def test_non_collinear_move_raises():
    h = pairs_hypergraph(3)
    # x_1 = 0 and x_2 = 2 share a block; 0 and anything do here, so build a
    # sparse hypergraph instead
    from conwaygroupoids.designs import Hypergraph

    sparse = Hypergraph(6, ((0, 1, 2, 3),))
    with pytest.raises(ValueError, match="non-collinear"):
        elementary_move(sparse, 0, 4)


def test_move_sequences():
    h = pg23()
    assert move(h, [4]).is_identity()
    assert move(h, [4, 9, 4]).is_identity()
    w = move(h, [0, 1, 2, 0])
    assert w == move(h, [0, 1]) * move(h, [1, 2]) * move(h, [2, 0])
    assert w(0) == 0
    # a closed triangle over a non-line triple is a nontrivial stabilizer element
    assert not all(move(h, [0, a, b, 0]).is_identity() for a in range(1, 13) for b in range(1, 13) if a != b)


def test_move_maps_first_point_to_last():
    h = quadratic_system(2, 0)
    seq = [0, 3, 7, 2]
    w = move(h, seq)
    assert w(0) == 2


def test_closed_walks_land_in_the_hole_stabilizer():
    h = pg23()
    g = build_groupoid(h, 0)
    pi = g.hole_stabilizer
    for a, b in [(1, 2), (3, 9), (5, 11), (7, 12)]:
        assert pi.contains(move(h, [0, a, b, 0]))
    # and conversely the coset factorization holds: every element of the
    # groupoid is stabilizer times the tree representative of its target
    w = move(h, [0, 4, 8])
    target = w(0)
    assert pi.contains(w * g.coset_reps[target].inverse())


def test_pg23_groupoid_fingerprint():
    g = build_groupoid(pg23(), 0)
    assert g.hole_stabilizer_order() == 95_040
    assert g.groupoid_size() == 13 * 95_040 == 1_235_520
    assert g.hole_stabilizer.transitivity_degree(g.stabilizer_domain) == 5
    assert 95_040 == 12 * 11 * 10 * 9 * 8  # sharply 5-transitive order
    assert not groupoid_is_group(g)


def test_boolean_groupoids_are_translation_groups():
    for m in (2, 3, 4):
        g = build_groupoid(boolean_system(m), 0)
        assert g.hole_stabilizer_order() == 1
        assert g.groupoid_size() == 1 << m
        assert groupoid_is_group(g)
        closure = groupoid_group_closure(g)
        assert closure.order() == 1 << m
        # elementary abelian: every non-identity element squares to identity
        for p in closure.elements():
            assert (p * p).is_identity()


def test_coset_reps_carry_hole_to_their_point():
    g = build_groupoid(pg23(), 0)
    for a in range(13):
        assert g.coset_reps[a](0) == a


def test_quadratic_2_0_orders():
    g = build_groupoid(quadratic_system(2, 0), 0)
    assert g.hole_stabilizer_order() == 72
    assert g.groupoid_size() == 720
    assert groupoid_is_group(g)


def test_symplectic_2_orders():
    g = build_groupoid(symplectic_system(2), 0)
    assert g.hole_stabilizer_order() == 720
    assert g.groupoid_size() == 11_520
    assert groupoid_is_group(g)
    report = classify(g)
    assert report.classification == "primitive"


def test_pairs_hypergraph_orders():
    # wreath-like orders: 2^(n-1) (n-1)! for odd n, half of it for even n
    expected = {3: 8, 4: 24, 5: 384, 6: 1920}
    for n, order in expected.items():
        g = build_groupoid(pairs_hypergraph(n), 0)
        assert g.hole_stabilizer_order() == order, n
        assert g.groupoid_size() == 2 * n * order
        assert groupoid_is_group(g)


def test_pairs_even_n_groupoid_is_even():
    g = build_groupoid(pairs_hypergraph(4), 0)
    report = classify(g)
    assert report.groupoid_parity == "even"
    g5 = build_groupoid(pairs_hypergraph(5), 0)
    assert classify(g5).groupoid_parity == "mixed"


def test_brute_force_oracle_matches_generated_groupoid():
    cases = [
        boolean_system(2),
        boolean_system(3),
        boolean_system(4),
        quadratic_system(2, 0),
        pairs_hypergraph(3),
        pairs_hypergraph(4),
        pairs_hypergraph(5),
    ]
    for h in cases:
        g = build_groupoid(h, 0)
        pi_oracle, groupoid_oracle = brute_force_groupoid(h, 0)
        pi = {p.images for p in g.hole_stabilizer.elements()}
        assert pi == pi_oracle, h.label
        assert len(groupoid_oracle) == g.groupoid_size(), h.label
        spanned = {
            (hstab * rep).images
            for hstab in g.hole_stabilizer.elements()
            for rep in g.coset_reps
        }
        assert spanned == groupoid_oracle, h.label


def test_brute_force_oracle_symplectic2():
    h = symplectic_system(2)
    g = build_groupoid(h, 0)
    pi_oracle, groupoid_oracle = brute_force_groupoid(h, 0, limit=20_000)
    assert len(groupoid_oracle) == 11_520 == g.groupoid_size()
    assert len(pi_oracle) == 720
    assert all(g.hole_stabilizer.contains(Permutation(p)) for p in list(pi_oracle)[:50])


def test_classify_boolean_trivial():
    report = classify(build_groupoid(boolean_system(4), 0))
    assert report.classification == "trivial"
    assert report.hole_stabilizer_order == 1
    assert report.is_group
    assert report.transitivity_degree == 0


def test_classify_pg23():
    report = classify(build_groupoid(pg23(), 0))
    assert report.classification == "primitive"
    assert report.transitivity_degree == 5
    assert not report.is_group
    assert not report.is_3_transposition
    assert report.hole_stabilizer_parity == "even"


def test_base_independence():
    assert verify_base_independence(pg23())
    assert verify_base_independence(boolean_system(3))
    assert verify_base_independence(pairs_hypergraph(4))
    assert verify_base_independence(quadratic_system(2, 0))


def test_closed_triangles():
    assert closed_triangle_moves_trivial(pg23())
    assert closed_triangle_moves_trivial(boolean_system(3))
    assert not closed_triangle_moves_trivial(symplectic_system(2))


def test_move_support_bound():
    # support of [a,b] is at most 2*lambda + 2; the closed triangle
    # [inf,a,b,inf] moves at most 6*lambda + 2 points
    for h, lam in [(pg23(), 1), (symplectic_system(2), 3), (quadratic_system(2, 0), 2)]:
        for a, b in [(0, 1), (1, 2)]:
            assert len(elementary_move(h, a, b).support()) <= 2 * lam + 2
        block = h.blocks[0]
        w = move(h, [block[0], block[1], block[2], block[0]])
        assert len(w.support()) <= 6 * lam + 2


def test_three_transposition_flag():
    assert is_3_transposition_family(
        distinct_elementary_moves(build_groupoid(boolean_system(3), 0).source)
    )
    assert is_3_transposition_family(
        distinct_elementary_moves(build_groupoid(symplectic_system(2), 0).source)
    )
    # the plane's moves include pairs whose product has order > 3
    assert not is_3_transposition_family(
        distinct_elementary_moves(build_groupoid(pg23(), 0).source)
    )


def test_design_laws_on_small_catalog():
    for h in [
        pg23(),
        boolean_system(2),
        boolean_system(3),
        boolean_system(4),
        symplectic_system(2),
        quadratic_system(2, 0),
    ]:
        report = design_law_report(h)
        assert report.all_hold(), (h.label, report.to_json())


def test_design_law_outcomes():
    assert design_law_report(boolean_system(3)).outcome == "boolean"
    assert design_law_report(pg23()).outcome == "projective-plane"


def test_design_laws_reject_non_design():
    with pytest.raises(ValueError):
        design_law_report(pairs_hypergraph(3))
