import random

import pytest

from lenumbers import (
    CycloProduct,
    InputError,
    UniPoly,
    cyclo_product,
    cyclotomic,
    factor_unity,
    homogeneous_char,
    homogeneous_char_exponents,
    mobius,
    totient,
    unipoly_gcd,
)


def test_mobius_and_totient_values():
    assert [mobius(k) for k in (1, 2, 3, 4, 6, 12, 30)] == [1, -1, -1, 0, 1, 0, -1]
    assert [totient(k) for k in (1, 2, 6, 12)] == [1, 1, 2, 4]


def test_cyclotomic_small():
    assert cyclotomic(1) == UniPoly((-1, 1))
    assert cyclotomic(2) == UniPoly((1, 1))
    # divide t^6-1 by Phi_1*Phi_2*Phi_3 by hand: t^2 - t + 1
    assert cyclotomic(6) == UniPoly((1, -1, 1))


def test_cyclotomic_degree_is_totient():
    for k in range(1, 40):
        assert cyclotomic(k).degree == totient(k)


def test_factor_unity_examples():
    assert factor_unity(1).factors == {1: 1}
    assert factor_unity(4).factors == {1: 1, 2: 1, 4: 1}
    assert factor_unity(6).factors == {1: 1, 2: 1, 3: 1, 6: 1}


def test_factor_unity_expands_to_unity():
    for d in range(1, 31):
        assert factor_unity(d).expand() == UniPoly.t_power_minus_one(d)


def test_homogeneous_char_worked_values():
    assert homogeneous_char_exponents(2, 3) == (2, 1)
    assert homogeneous_char(2, 3).factors == {1: 2, 3: 1}
    assert homogeneous_char(2, 3).degree() == 4
    assert homogeneous_char_exponents(2, 2) == (1, 0)
    assert homogeneous_char(2, 2).factors == {1: 1}
    assert homogeneous_char_exponents(3, 2) == (0, 1)
    assert homogeneous_char(3, 2).factors == {2: 1}
    assert homogeneous_char(3, 2).degree() == 1


def test_homogeneous_char_degree_and_trace_sweep():
    for n in range(1, 5):
        for d in range(2, 10):
            a0, b0 = homogeneous_char_exponents(n, d)
            char = homogeneous_char(n, d)
            assert char.degree() == (d - 1) ** n
            assert a0 + (d - 1) * b0 == (d - 1) ** n
            assert char.trace() == (-1) ** n


def test_homogeneous_char_rejects_bad_input():
    with pytest.raises(InputError):
        homogeneous_char(0, 3)
    with pytest.raises(InputError):
        homogeneous_char(2, 1)


def test_gcd_examples():
    x = CycloProduct({1: 2, 3: 1})
    assert x.gcd(x) == x
    assert CycloProduct({1: 2, 3: 1}).gcd(CycloProduct({1: 3})) == CycloProduct({1: 2})
    assert homogeneous_char(2, 3).gcd(CycloProduct({1: 3})) == CycloProduct({1: 2})


def test_product_examples():
    assert cyclo_product([]) == CycloProduct()
    assert cyclo_product([CycloProduct({1: 1}), CycloProduct({1: 2})]) == CycloProduct({1: 3})
    three = cyclo_product([homogeneous_char(2, 2)] * 3)
    assert three == CycloProduct({1: 3})


def test_divides_examples():
    assert CycloProduct().divides(CycloProduct({5: 2}))
    assert CycloProduct({1: 2}).divides(CycloProduct({1: 2, 3: 1}))
    assert not homogeneous_char(2, 3).divides(CycloProduct({1: 3}))


def test_trace_examples():
    assert CycloProduct({1: 5}).trace() == 5
    assert CycloProduct({2: 1}).trace() == -1
    assert homogeneous_char(2, 3).trace() == 1


def test_expand_examples():
    assert CycloProduct().expand() == UniPoly((1,))
    assert CycloProduct({1: 1, 2: 1}).expand() == UniPoly((-1, 0, 1))
    # (t-1)^2 (t^2+t+1) multiplied out by hand
    assert homogeneous_char(2, 3).expand() == UniPoly((1, -1, 0, -1, 1))


def _random_product(rng) -> CycloProduct:
    factors = {}
    for _ in range(rng.randint(0, 3)):
        factors[rng.randint(1, 12)] = rng.randint(1, 3)
    return CycloProduct(factors)


def test_expand_is_multiplicative():
    rng = random.Random(23)
    for _ in range(40):
        a, b = _random_product(rng), _random_product(rng)
        assert (a * b).expand() == a.expand() * b.expand()


def test_gcd_matches_expanded_gcd():
    rng = random.Random(29)
    for _ in range(60):
        a, b = _random_product(rng), _random_product(rng)
        assert a.gcd(b).expand() == unipoly_gcd(a.expand(), b.expand())


def test_degree_matches_expansion():
    rng = random.Random(31)
    for _ in range(30):
        a = _random_product(rng)
        assert a.degree() == a.expand().degree


def test_str_and_parse():
    c = CycloProduct({3: 1, 1: 2})
    assert str(c) == "Phi_1^2 * Phi_3"
    assert CycloProduct.parse("Phi_1^2 * Phi_3") == c
    assert CycloProduct.parse("1") == CycloProduct()
    assert str(CycloProduct()) == "1"
    with pytest.raises(InputError):
        CycloProduct.parse("Phi_x")
