import random
from fractions import Fraction
from math import comb

import pytest

from lenumbers import (
    CentralArrangement3,
    CycloProduct,
    InputError,
    analyze_poly,
    arrangement_report,
    defining_polynomial,
    homogeneous_char,
    multiple_points,
    pick_slice_form,
    to_setup,
)
from lenumbers.arrangements import validate_slice_form
from lenumbers.constraints import VERDICT_EXPONENTS, VERDICT_NON_SPLITTING

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
COORDINATE_PLANES = (E1, E2, E3)
PENCIL3 = (E1, E2, (1, 1, 0))
GENERIC4 = (E1, E2, E3, (1, 1, 1))


def test_arrangement_validation():
    with pytest.raises(InputError, match="two planes"):
        CentralArrangement3((E1,))
    with pytest.raises(InputError, match="nonzero"):
        CentralArrangement3((E1, (0, 0, 0)))
    with pytest.raises(InputError, match="proportional"):
        CentralArrangement3((E1, (2, 0, 0)))
    with pytest.raises(InputError, match="proportional"):
        CentralArrangement3((E1, E2, (Fraction(-1, 2), 0, 0)))


def test_multiple_points_coordinate_planes():
    points = multiple_points(CentralArrangement3(COORDINATE_PLANES))
    assert [(p.line, p.multiplicity) for p in points] == [
        ((0, 0, 1), 2), ((0, 1, 0), 2), ((1, 0, 0), 2)]


def test_multiple_points_pencil():
    points = multiple_points(CentralArrangement3(PENCIL3))
    assert [(p.line, p.multiplicity) for p in points] == [((0, 0, 1), 3)]


def test_multiple_points_generic_quadruple():
    points = multiple_points(CentralArrangement3(GENERIC4))
    assert len(points) == 6
    assert all(p.multiplicity == 2 for p in points)


def test_multiple_points_input_order_independent():
    rng = random.Random(67)
    normals = list(GENERIC4)
    baseline = multiple_points(CentralArrangement3(tuple(normals)))
    for _ in range(5):
        rng.shuffle(normals)
        assert multiple_points(CentralArrangement3(tuple(normals))) == baseline


def _random_arrangement(rng) -> CentralArrangement3:
    normals = []
    while len(normals) < rng.randint(2, 8):
        candidate = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
        if not any(candidate):
            continue
        from lenumbers.arrangements import _cross
        if any(not any(_cross(candidate, n)) for n in normals):
            continue
        normals.append(candidate)
    return CentralArrangement3(tuple(normals))


def test_pair_accounting_random():
    rng = random.Random(71)
    for _ in range(100):
        arr = _random_arrangement(rng)
        points = multiple_points(arr)
        assert sum(comb(p.multiplicity, 2) for p in points) == comb(arr.d0, 2)


def test_lambda1_at_most_mu0_with_equality_iff_pencil():
    rng = random.Random(73)
    for _ in range(60):
        arr = _random_arrangement(rng)
        points = multiple_points(arr)
        lam1 = sum((p.multiplicity - 1) ** 2 for p in points)
        mu0 = (arr.d0 - 1) ** 2
        assert lam1 <= mu0
        is_pencil = len(points) == 1 and points[0].multiplicity == arr.d0
        assert (lam1 == mu0) == is_pencil


def test_to_setup_coordinate_planes():
    setup = to_setup(CentralArrangement3(COORDINATE_PLANES))
    assert setup.n == 2
    assert setup.mu0 == 4
    assert setup.char_h0_effective() == homogeneous_char(2, 3)
    assert len(setup.components) == 3
    assert all(c.k == 1 and c.mu == 1 and c.d == 2 for c in setup.components)


def test_report_coordinate_planes():
    report = arrangement_report(CentralArrangement3(COORDINATE_PLANES))
    assert report.divisor_bound == CycloProduct({1: 2})
    assert report.rank_bound == 3
    ceilings = next(v for v in report.verdicts if v.tag == VERDICT_EXPONENTS)
    assert ceilings.data["ceilings"] == {"1": 2, "3": 0}
    assert ceilings.data["a0"] == 2 and ceilings.data["b0"] == 1


def test_report_pencil():
    report = arrangement_report(CentralArrangement3(PENCIL3))
    # gcd of identical characteristic polynomials: the whole slice polynomial
    assert report.divisor_bound == homogeneous_char(2, 3)
    tags = [v.tag for v in report.verdicts]
    assert VERDICT_NON_SPLITTING in tags
    ceilings = next(v for v in report.verdicts if v.tag == VERDICT_EXPONENTS)
    assert ceilings.data["ceilings"] == {"1": 2, "3": 1}


def test_report_generic_quadruple():
    report = arrangement_report(CentralArrangement3(GENERIC4))
    assert report.divisor_bound == CycloProduct({1: 3})
    assert report.rank_bound == 6
    assert report.lambda1 == 6


def test_report_two_planes_non_splitting_consistency():
    report = arrangement_report(CentralArrangement3((E1, E2)))
    assert report.lambda1 == 1
    assert report.divisor_bound == CycloProduct({1: 1})
    tags = [v.tag for v in report.verdicts]
    assert VERDICT_NON_SPLITTING in tags
    # single critical line: the non-splitting conclusion matches the input
    assert not any("contradicts" in w for w in report.warnings)


def test_slice_form_validation():
    arr = CentralArrangement3(COORDINATE_PLANES)
    form = pick_slice_form(arr)
    assert all(form)  # must be nonzero against each axis
    with pytest.raises(InputError, match="vanishes"):
        validate_slice_form(arr, (0, 0, 1))  # kills the z-axis line
    with pytest.raises(InputError, match="vanishes"):
        arrangement_report(arr, z0=(1, 1, 0))


def test_arrangement_report_json_roundtrip():
    from lenumbers import ConstraintReport

    report = arrangement_report(CentralArrangement3(GENERIC4))
    assert ConstraintReport.from_dict(report.to_dict()) == report


def test_defining_polynomial():
    f = defining_polynomial(CentralArrangement3(COORDINATE_PLANES))
    from lenumbers import parse_poly
    assert f == parse_poly("x*y*z", ["x", "y", "z"])


def test_cross_check_degree_four_arrangements():
    # combinatorial formulas versus the analytic pipeline on degree-4 inputs,
    # including one with a triple line (lambda1 = 4 + 1 + 1 + 1)
    cases = [
        (E1, E2, E3, (1, 1, 1)),
        (E1, E2, (1, 1, 0), E3),
        ((1, 2, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ]
    for normals in cases:
        arr = CentralArrangement3(normals)
        setup = to_setup(arr)
        inv = analyze_poly(defining_polynomial(arr),
                           z0=pick_slice_form(arr)).invariants
        assert inv.genericity_ok
        assert inv.mu0 == setup.mu0
        assert inv.lambda1 == sum(c.k * c.mu for c in setup.components)


def test_cross_check_against_slice_pipeline():
    # coordinate planes: the analytic pipeline must agree with the formulas
    arr = CentralArrangement3(COORDINATE_PLANES)
    setup = to_setup(arr)
    result = analyze_poly(defining_polynomial(arr), z0=pick_slice_form(arr))
    inv = result.invariants
    assert inv.genericity_ok
    assert inv.mu0 == setup.mu0
    assert inv.lambda1 == sum(c.k * c.mu for c in setup.components)

    # pencil of three planes: equality mu0 == lambda1 shows up analytically
    pencil = CentralArrangement3(PENCIL3)
    result = analyze_poly(defining_polynomial(pencil), z0=pick_slice_form(pencil))
    inv = result.invariants
    assert inv.genericity_ok
    assert inv.mu0 == 4
    assert inv.lambda1 == 4
    assert inv.lambda0 == 0 and inv.omega == 0
