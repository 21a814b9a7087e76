import pytest

from conwaygroupoids.designs import boolean_system, pg23, quadratic_system
from conwaygroupoids.groupoid import (
    brute_force_groupoid,
    build_groupoid,
    groupoid_is_group,
)
from conwaygroupoids.perms import Permutation
from conwaygroupoids.pliable import (
    affine_complement,
    agrees_with_design,
    from_design,
    from_group,
    paley6,
    primitivity_criterion,
    validate,
)


def klein_table():
    return [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]


def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def test_design_induced_function_validates():
    for h in [pg23(), boolean_system(3), quadratic_system(2, 0)]:
        f = from_design(h)
        ok, msg = validate(f)
        assert ok, (h.label, msg)


def test_design_induced_function_matches_design_groupoid():
    for h in [boolean_system(3), quadratic_system(2, 0), pg23()]:
        assert agrees_with_design(from_design(h), h)


def test_design_induced_orders():
    assert build_groupoid(from_design(pg23()), 0).groupoid_size() == 13 * 95_040
    assert build_groupoid(from_design(boolean_system(3)), 0).hole_stabilizer_order() == 1
    assert build_groupoid(from_design(quadratic_system(2, 0)), 0).hole_stabilizer_order() == 72


def test_naked_transposition_table_fails_support_axiom():
    f = paley6()
    bad = dict(f.table)
    for a in range(6):
        for b in range(6):
            if a != b:
                bad[a, b] = Permutation.from_cycles(6, [(a, b)])
    from conwaygroupoids.pliable import PliableFunction

    ok, msg = validate(PliableFunction(f.triple_system, bad, label="bad"))
    assert not ok
    assert "support" in msg


def test_from_group_cyclic():
    f = from_group(cyclic_table(5), label="c5")
    ok, msg = validate(f)
    assert ok, msg
    assert f.triple_system.mu == 3
    g = build_groupoid(f, 0)
    assert g.hole_stabilizer_order() == 1
    assert g.groupoid_size() == 5
    assert groupoid_is_group(g)


def test_from_group_klein_matches_boolean_moves():
    f = from_group(klein_table(), label="klein")
    ok, _ = validate(f)
    assert ok
    g = build_groupoid(f, 0)
    assert g.groupoid_size() == 4
    # the right regular moves of the Klein group are the boolean translations
    fb = from_design(boolean_system(2))
    assert all(f.table[a, b] == fb.table[a, b] for a in range(4) for b in range(4))


def test_from_group_regular_action():
    f = from_group(cyclic_table(7), label="c7")
    g = build_groupoid(f, 0)
    for p in g.coset_reps:
        if not p.is_identity():
            assert len(p.fixed_points()) == 0  # only the identity fixes a point


def test_from_group_rejects_non_groups():
    with pytest.raises(ValueError):
        from_group([[0, 1], [1, 0]])  # too small for a triple system
    broken = cyclic_table(5)
    broken[2][3] = 3  # breaks associativity/latin property
    with pytest.raises(ValueError):
        from_group(broken)
    with pytest.raises(ValueError):
        from_group([[1, 1, 1], [1, 1, 1], [1, 1, 1]])  # no identity


def test_paley6():
    f = paley6()
    ok, msg = validate(f)
    assert ok, msg
    assert f.triple_system.mu == 2
    g = build_groupoid(f, 0)
    assert g.groupoid_size() == 60
    assert groupoid_is_group(g)
    # every off-diagonal move is a double transposition
    for a in range(6):
        for b in range(6):
            if a != b:
                assert sorted(len(c) for c in f.table[a, b].cycles()) == [2, 2]


def test_affine_complement_k2():
    f = affine_complement(2)
    ok, msg = validate(f)
    assert ok, msg
    assert f.num_points == 9
    assert f.triple_system.mu == 6
    g = build_groupoid(f, 0)
    assert g.groupoid_size() == 18
    assert g.hole_stabilizer_order() == 2
    closure = build_groupoid(f, 0)
    assert groupoid_is_group(g)


def test_affine_moves_are_point_reflections():
    from conwaygroupoids.pliable import _vec_add, _vec_neg

    f = affine_complement(2)
    for a in range(9):
        for b in range(9):
            m = f.table[a, b]
            if a != b:
                assert len(m.support()) == 8
            fixed = _vec_neg(_vec_add(a, b, 2), 2)
            assert m(fixed) == fixed
    # [a,b] = [c,d] whenever a+b = c+d (checked exhaustively for k = 2)
    for a in range(9):
        for b in range(9):
            for c in range(9):
                for d in range(9):
                    if _vec_add(a, b, 2) == _vec_add(c, d, 2):
                        assert f.table[a, b] == f.table[c, d]


@pytest.mark.parametrize("k", [2, 3])
def test_affine_moves_match_the_transposition_product(k):
    # independent oracle: build each move as the explicit product of the
    # transpositions (w, a+b-w) over w with w + a + b != 0
    from conwaygroupoids.pliable import _vec_add, _vec_neg

    f = affine_complement(k)
    n = 3 ** k
    for a in range(n):
        for b in range(n):
            s = _vec_add(a, b, k)
            images = list(range(n))
            for w in range(n):
                if _vec_add(w, s, k) != 0:  # w + a + b != 0 in GF(3)^k
                    images[w] = _vec_add(s, _vec_neg(w, k), k)
            assert f.table[a, b].images == tuple(images), (a, b)


def test_affine_complement_k3_imprimitive():
    f = affine_complement(3)
    ok, msg = validate(f)
    assert ok, msg
    assert f.num_points == 27 and f.triple_system.mu == 24
    g = build_groupoid(f, 0)
    # closure: translations extended by the point reflection
    assert g.groupoid_size() == 54
    from conwaygroupoids.groupoid import groupoid_group_closure

    closure = groupoid_group_closure(g)
    assert closure.order() == 54
    assert not closure.is_primitive(range(27))


def test_affine_imprimitivity_blocks_of_three():
    f = affine_complement(2)
    g = build_groupoid(f, 0)
    from conwaygroupoids.groupoid import groupoid_group_closure

    closure = groupoid_group_closure(g)
    assert closure.order() == 18
    blocks = closure.minimal_block(0, 1)
    assert not closure.is_primitive(range(9))
    systems = {closure.minimal_block(0, b).num_blocks for b in range(1, 9)}
    assert 3 in systems  # three blocks of size 3 appear


def test_brute_force_oracle_on_pliable_functions():
    for f, expect in [(paley6(), 60), (affine_complement(2), 18), (from_group(cyclic_table(5)), 5)]:
        g = build_groupoid(f, 0)
        pi_o, L_o = brute_force_groupoid(f, 0)
        assert len(L_o) == expect == g.groupoid_size(), f.label
        assert len(pi_o) == g.hole_stabilizer_order(), f.label


def test_primitivity_criterion_reports():
    r = primitivity_criterion(affine_complement(2))
    assert r.status == "not-applicable"  # n = (3/2) mu exactly
    assert r.sharp_witness
    assert r.primitive is False

    r = primitivity_criterion(paley6())
    assert r.status == "not-applicable"  # mu = 2 <= 4
    assert not r.sharp_witness

    # group functions have mu = n - 2, so mu > 4 and 2n > 3*mu never hold
    # together; the regular prime-degree action is still primitive
    r = primitivity_criterion(from_group(cyclic_table(7)))
    assert r.status == "not-applicable"
    assert r.primitive is True
    assert not r.frontier_counterexample

    from conwaygroupoids.designs import symplectic_system

    r = primitivity_criterion(from_design(symplectic_system(2)))
    assert r.status == "passes"  # mu = 6 > 4 and 2n = 32 > 18
    assert r.primitive is True


def test_primitivity_criterion_on_design_functions():
    r = primitivity_criterion(from_design(quadratic_system(2, 0)))
    assert r.status in ("passes", "not-applicable")
    assert r.primitive is True
