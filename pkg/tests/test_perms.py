import random

import pytest

from conwaygroupoids.perms import Permutation, product


def test_identity_composes_neutrally():
    p = Permutation.from_cycles(5, [(0, 1, 2)])
    e = Permutation.identity(5)
    assert e * p == p
    assert p * e == p


def test_left_factor_acts_first():
    # (0 1) then (1 2): 0 goes to 1 under the left factor, then 1 goes to 2,
    # so the product is the 3-cycle (0 2 1) and (p * q)(x) == q(p(x)).
    a = Permutation.from_cycles(3, [(0, 1)])
    b = Permutation.from_cycles(3, [(1, 2)])
    c = a * b
    assert c(0) == b(a(0)) == 2
    assert c(2) == 1 and c(1) == 0
    assert c.cycles() == [(0, 2, 1)]


def test_inverse_and_associativity_random():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(1, 12)
        perms = []
        for _ in range(3):
            imgs = list(range(n))
            rng.shuffle(imgs)
            perms.append(Permutation(imgs))
        p, q, r = perms
        assert (p * q) * r == p * (q * r)
        assert (p.inverse() * p).is_identity()
        assert (p * p.inverse()).is_identity()


def test_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([0, 2])
    with pytest.raises(ValueError):
        Permutation.from_cycles(4, [(0, 1), (1, 2)])


def test_degree_mismatch_raises():
    with pytest.raises(ValueError):
        Permutation.identity(3) * Permutation.identity(4)


def test_parity():
    assert Permutation.identity(6).parity() == "even"
    assert Permutation.from_cycles(6, [(0, 1)]).parity() == "odd"
    assert Permutation.from_cycles(6, [(0, 1), (2, 3)]).parity() == "even"
    assert Permutation.from_cycles(6, [(0, 1, 2)]).parity() == "even"


def test_cycles_and_order():
    p = Permutation.from_cycles(7, [(0, 1, 2), (3, 4)])
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p.order() == 6
    assert p.cycle_string() == "(0 1 2)(3 4)"
    assert Permutation.identity(3).cycle_string() == "()"


def test_support_and_pow():
    p = Permutation.from_cycles(5, [(1, 2, 3)])
    assert p.support() == (1, 2, 3)
    assert (p ** 3).is_identity()
    assert p ** -1 == p.inverse()
    assert p ** 0 == Permutation.identity(5)


def test_json_round_trip():
    p = Permutation.from_cycles(4, [(0, 3)])
    assert Permutation.from_json(p.to_json()) == p
    assert p.to_json() == {"degree": 4, "images": [3, 1, 2, 0]}


def test_product_helper():
    a = Permutation.from_cycles(4, [(0, 1)])
    b = Permutation.from_cycles(4, [(2, 3)])
    assert product([a, b]) == a * b
    assert product([], degree=4).is_identity()
