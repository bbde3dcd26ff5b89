import pytest

from lenumbers import (
    InputError,
    INFINITE,
    SliceSetup,
    analyze_poly,
    compute_all,
    ideal,
    ideals_equal,
    lambda0,
    lambda1,
    mu0,
    omega,
    parse_poly,
    polar_ideal,
    slice_with_form,
    MultiPoly,
)

ZXY = ["z", "x", "y"]


def setup_from(text, names=ZXY):
    return SliceSetup(parse_poly(text, names))


def test_slice_setup_validation():
    with pytest.raises(InputError, match="vanish"):
        SliceSetup(parse_poly("x^2 + 1", ZXY))
    with pytest.raises(InputError, match="critical"):
        SliceSetup(parse_poly("x + y^2", ZXY))
    with pytest.raises(InputError):
        SliceSetup(MultiPoly.zero(3))


def test_mu0_examples():
    assert mu0(setup_from("z^2 + x^2 + y^2")) == 1
    assert mu0(setup_from("x^2 + y^2")) == 1
    # non-generic slice: the sliced function has a line of critical points
    assert mu0(setup_from("x^2")) is INFINITE


def test_polar_ideal_examples():
    # f in the non-slice Jacobian forces an empty polar curve
    empty = polar_ideal(setup_from("x^2 + y^2"))
    assert ideals_equal(empty, ideal([MultiPoly.constant(1, 3)], 3))
    # A1 point: the polar curve is the slice axis
    axis = polar_ideal(setup_from("z^2 + x^2 + y^2"))
    x = MultiPoly.variable(1, 3)
    y = MultiPoly.variable(2, 3)
    assert ideals_equal(axis, ideal([x, y]))


def test_lambda0_omega_lambda1_on_a1_singularities():
    smooth_cylinder = setup_from("x^2 + y^2")
    assert lambda0(smooth_cylinder) == 0
    assert omega(smooth_cylinder) == 0
    assert lambda1(smooth_cylinder) == 1

    cone = setup_from("z^2 + x^2 + y^2")
    assert lambda0(cone) == 1
    assert omega(cone) == 2
    assert lambda1(cone) == 0


def test_compute_all_worked_examples():
    inv = compute_all(setup_from("x^2 + y^2"))
    assert (inv.mu0, inv.lambda0, inv.lambda1, inv.omega) == (1, 0, 1, 0)
    assert inv.genericity_ok

    inv = compute_all(setup_from("z^2 + x^2 + y^2"))
    assert (inv.mu0, inv.lambda0, inv.lambda1, inv.omega) == (1, 1, 0, 2)
    assert inv.genericity_ok

    inv = compute_all(setup_from("x^2"))
    assert inv.mu0 is None
    assert not inv.genericity_ok


def test_slice_with_form_matches_hand_substitution():
    f = parse_poly("x*y*z", ["x", "y", "z"])
    setup, names = slice_with_form(f, [1, 1, 1], ["x", "y", "z"])
    assert names == ("w", "y", "z")
    # x = w - y - z by hand
    assert setup.f == parse_poly("(w - y - z)*y*z", ["w", "y", "z"])
    assert setup.f.nvars == 3


def test_slice_with_form_rejects_bad_forms():
    f = parse_poly("x*y*z", ["x", "y", "z"])
    with pytest.raises(InputError):
        slice_with_form(f, [0, 0, 0])
    with pytest.raises(InputError):
        slice_with_form(f, [1, 1])


def test_triple_planes_full_pipeline():
    f = parse_poly("x*y*z", ["x", "y", "z"])
    result = analyze_poly(f, z0=[1, 1, 1])
    inv = result.invariants
    assert (inv.mu0, inv.lambda0, inv.lambda1, inv.omega) == (4, 2, 3, 3)
    assert inv.genericity_ok
    # lambda0 - lambda1 = -1, the reduced Euler characteristic of (C*)^2
    assert inv.lambda0 - inv.lambda1 == -1


def test_triple_planes_generic_search_and_seed_independence():
    f = parse_poly("x*y*z", ["x", "y", "z"])
    first = analyze_poly(f, seed=1).invariants
    second = analyze_poly(f, seed=2).invariants
    assert first.genericity_ok and second.genericity_ok
    assert first.z0 != second.z0  # genuinely different slice forms
    for field in ("mu0", "lambda0", "lambda1", "omega"):
        assert getattr(first, field) == getattr(second, field)


def test_brieskorn_family_isolated_singularities():
    # f = x^a + y^b + z0^c has an isolated singularity; for the coordinate
    # slice the classical product formulas give mu0 and lambda0 exactly.
    for (a, b, c) in [(2, 2, 2), (2, 3, 2), (3, 3, 2), (2, 2, 3), (3, 2, 4)]:
        f = parse_poly(f"x^{a} + y^{b} + z^{c}", ZXY)
        inv = compute_all(SliceSetup(f))
        assert inv.genericity_ok
        assert inv.mu0 == (a - 1) * (b - 1)
        assert inv.lambda0 == (a - 1) * (b - 1) * (c - 1)
        assert inv.lambda1 == 0
        assert inv.omega == inv.lambda0 + inv.mu0


def test_nontransverse_slice_counts_with_multiplicity():
    # Sigma f is the parabola {x = 0, y = z^2}; the slice form y meets it
    # doubly, so lambda1 = k * mu = 2 while the transverse type stays A1.
    # By hand: mu0 = mu(x^2 + z^4) = 3, polar curve = the y-axis, lambda0 = 1,
    # omega = 2, lambda1 = colength(x, y, z^3) - colength(x, y, z) = 3 - 1.
    f = parse_poly("x^2 + (y - z^2)^2", ["y", "x", "z"])
    result = analyze_poly(f, z0=[1, 0, 0], names=["y", "x", "z"])
    inv = result.invariants
    assert (inv.mu0, inv.lambda0, inv.lambda1, inv.omega) == (3, 1, 2, 2)
    x = MultiPoly.variable(1, 3)
    z = MultiPoly.variable(2, 3)
    assert ideals_equal(result.polar, ideal([x, z]))


def test_omega_dominates_lambda0_across_corpus():
    corpus = [
        "x^2 + y^2",
        "z^2 + x^2 + y^2",
        "x^3 + y^3 + z^2",
        "x^2*y + z^2",
        "x^3 + y^4 + z^2",
    ]
    for text in corpus:
        inv = compute_all(setup_from(text))
        if not inv.genericity_ok:
            continue
        assert inv.omega >= inv.lambda0
        if inv.omega == inv.lambda0:
            assert inv.omega == 0


def test_polar_curve_chain_rule_identity():
    # along each polar branch, ord(f) = ord(df/dz0) + ord(z0), so
    # omega = lambda0 + (polar . V(z0)) whenever everything is finite
    from lenumbers import colength, ideal_sum, INFINITE

    corpus = [
        ("x^2 + y^2", ["z", "x", "y"], [1, 0, 0]),
        ("z^2 + x^2 + y^2", ["z", "x", "y"], [1, 0, 0]),
        ("x^3 + y^3 + z^2", ["z", "x", "y"], [1, 0, 0]),
        ("x*y*z", ["x", "y", "z"], [1, 1, 1]),
        ("x^2 + (y - z^2)^2", ["y", "x", "z"], [1, 0, 0]),
    ]
    for text, names, z0 in corpus:
        result = analyze_poly(parse_poly(text, names), z0=z0, names=names)
        inv = result.invariants
        assert inv.genericity_ok
        slice_meets_polar = colength(
            ideal_sum(result.polar, result.setup.slice_ideal()))
        assert slice_meets_polar is not INFINITE
        assert inv.omega == inv.lambda0 + slice_meets_polar


def test_whitney_umbrella():
    # f = x^2 - y^2*z: critical locus the z-axis with transverse A1 points.
    # Euler oracle: the Milnor fiber double-covers C^2 branched along the
    # smooth curve y^2*z = -1 (a copy of C*), so chi(F) = 2*1 - 0 = 2 and
    # lambda0 - lambda1 = reduced chi = 1.
    f = parse_poly("x^2 - y^2*z", ["x", "y", "z"])
    inv = analyze_poly(f, seed=0).invariants
    assert inv.genericity_ok
    assert (inv.mu0, inv.lambda0, inv.lambda1, inv.omega) == (2, 2, 1, 3)
    assert inv.lambda0 - inv.lambda1 == 1


def test_whitney_umbrella_like_example():
    # f = x^2*y + z^2 over (z, x, y): slicing by z keeps a 1-dimensional
    # critical locus, so the coordinate slice is rejected; a generic one works.
    f = parse_poly("x^2*y + z^2", ["x", "y", "z"])
    result = analyze_poly(f, seed=0)
    inv = result.invariants
    assert inv.genericity_ok
    assert inv.omega >= inv.lambda0
    assert inv.lambda1 >= 1


def test_le_invariants_serialization_roundtrip():
    from lenumbers import LeInvariants

    inv = compute_all(setup_from("x^2 + y^2"))
    data = inv.to_dict()
    assert LeInvariants.from_dict(data) == inv
