"""The slice-invariant pipeline for a one-dimensional critical locus.

Given f on C^{n+1} and a linear slice form (arranged to be the first
coordinate), this module computes the Milnor number of the sliced function,
the relative polar curve, the Le numbers lambda^0 and lambda^1, and the polar
intersection number omega, together with the checkable genericity verdicts.

Intersection numbers are realized as colengths of ideal sums.  Length equals
intersection multiplicity for the Cohen-Macaulay curve ideals produced by
saturation here; reports carry a warning naming that identification.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GenericityError, InputError, InvariantViolationError
from .localring import (
    Budget,
    INFINITE,
    Ideal,
    colength,
    ideal,
    ideal_sum,
    is_finite,
    saturate,
)
from .polynomials import MultiPoly

LENGTH_IDENTIFICATION_WARNING = (
    "intersection numbers are computed as colengths; this identifies length "
    "with intersection multiplicity along the polar curve"
)

GENERICITY_SCOPE_WARNING = (
    "genericity of the slice form is checked only through finiteness of mu0, "
    "lambda0, omega and lambda1; full genericity is not certified"
)


@dataclass(frozen=True)
class SliceSetup:
    """f in coordinates where the slice form is variable 0.

    The original slice coefficients, when the setup came from a coordinate
    change, are kept for reporting only.
    """

    f: MultiPoly
    z0_coefficients: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.f.nvars < 2:
            raise InputError("need at least two variables (slice plus one)")
        if self.f.is_zero:
            raise InputError("f must be nonzero")
        if self.f.constant_term():
            raise InputError("f must vanish at the origin")
        point = (0,) * self.f.nvars
        for i in range(self.f.nvars):
            if self.f.partial(i).evaluate(point):
                raise InputError("the origin must be a critical point of f")

    @property
    def n(self) -> int:
        """Ambient dimension parameter: f lives on C^{n+1}."""
        return self.f.nvars - 1

    def sliced(self) -> MultiPoly:
        return self.f.restrict_first_var()

    def jacobian_rest(self) -> Ideal:
        """Ideal of all partials except the slice-direction partial."""
        return ideal([self.f.partial(i) for i in range(1, self.f.nvars)],
                     self.f.nvars)

    def slice_ideal(self) -> Ideal:
        return ideal([MultiPoly.variable(0, self.f.nvars)], self.f.nvars)


def mu0(setup: SliceSetup, budget: Budget | None = None):
    """Milnor number of the sliced function at the origin, or INFINITE.

    INFINITE means the slice hyperplane does not cut the critical locus down
    to the origin, i.e. the slice form is not generic.
    """
    f0 = setup.sliced()
    jac = ideal([f0.partial(i) for i in range(f0.nvars)], f0.nvars)
    return colength(jac, budget)


def polar_ideal(setup: SliceSetup, budget: Budget | None = None) -> Ideal:
    """The relative polar curve: the non-slice partials saturated by f.

    The critical locus lies inside V(f), so saturating by f itself removes
    exactly the critical components and keeps every polar component.
    """
    return saturate(setup.jacobian_rest(), setup.f, budget)


def lambda0(setup: SliceSetup, polar: Ideal | None = None,
            budget: Budget | None = None) -> int:
    """The 0-dimensional Le number: polar curve against the slice-direction partial."""
    polar = polar_ideal(setup, budget) if polar is None else polar
    top = ideal_sum(polar, ideal([setup.f.partial(0)], setup.f.nvars))
    value = colength(top, budget)
    if not is_finite(value):
        raise GenericityError("lambda0 is infinite: the slice form is not generic")
    return value


def omega(setup: SliceSetup, polar: Ideal | None = None,
          budget: Budget | None = None, lambda0_value: int | None = None) -> int:
    """The polar intersection number with V(f) itself.

    Validates omega >= lambda0 with equality only when both vanish; a
    violation indicates a bug rather than bad input.
    """
    polar = polar_ideal(setup, budget) if polar is None else polar
    value = colength(ideal_sum(polar, ideal([setup.f], setup.f.nvars)), budget)
    if not is_finite(value):
        raise GenericityError("omega is infinite: the slice form is not generic")
    l0 = lambda0(setup, polar, budget) if lambda0_value is None else lambda0_value
    if value < l0 or (value == l0 and value != 0):
        raise InvariantViolationError(
            f"omega={value}, lambda0={l0}: the inequality omega >= lambda0 "
            "with equality only at zero failed")
    return value


def lambda1(setup: SliceSetup, polar: Ideal | None = None,
            budget: Budget | None = None) -> int:
    """The 1-dimensional Le number, as a colength difference.

    Both the full non-slice Jacobian scheme and the polar curve are cut by
    the slice hyperplane; their colength difference counts the transverse
    Milnor numbers along the critical locus, weighted by slice intersection.
    """
    polar = polar_ideal(setup, budget) if polar is None else polar
    z0 = setup.slice_ideal()
    total = colength(ideal_sum(setup.jacobian_rest(), z0), budget)
    if not is_finite(total):
        raise GenericityError("lambda1 is infinite: the slice form is not generic")
    polar_part = colength(ideal_sum(polar, z0), budget)
    if not is_finite(polar_part):
        raise GenericityError("polar curve meets the slice in positive dimension")
    return total - polar_part


@dataclass(frozen=True)
class LeInvariants:
    """Computed slice invariants; fields are None past the first failure."""

    mu0: int | None
    lambda0: int | None
    lambda1: int | None
    omega: int | None
    genericity_ok: bool
    warnings: tuple[str, ...]
    z0: tuple[Fraction, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "mu0": self.mu0,
            "lambda0": self.lambda0,
            "lambda1": self.lambda1,
            "omega": self.omega,
            "genericity_ok": self.genericity_ok,
            "warnings": list(self.warnings),
            "z0": None if self.z0 is None else [_frac_out(c) for c in self.z0],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LeInvariants":
        z0 = data.get("z0")
        return cls(
            mu0=data.get("mu0"),
            lambda0=data.get("lambda0"),
            lambda1=data.get("lambda1"),
            omega=data.get("omega"),
            genericity_ok=bool(data["genericity_ok"]),
            warnings=tuple(data.get("warnings", ())),
            z0=None if z0 is None else tuple(Fraction(c) for c in z0),
        )

    def render_text(self) -> str:
        lines = ["slice invariants:"]
        for label, value in (("mu0", self.mu0), ("lambda0", self.lambda0),
                             ("lambda1", self.lambda1), ("omega", self.omega)):
            lines.append(f"  {label} = {'INFINITE/unknown' if value is None else value}")
        lines.append(f"  genericity_ok = {str(self.genericity_ok).lower()}")
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        return "\n".join(lines)


def _frac_out(c: Fraction):
    return int(c) if c.denominator == 1 else str(c)


def compute_all(setup: SliceSetup, budget: Budget | None = None) -> LeInvariants:
    """Run the whole pipeline, downgrading genericity failures to a verdict."""
    result, _ = _pipeline(setup, budget)
    return result


def _pipeline(setup: SliceSetup, budget: Budget | None):
    warnings = [LENGTH_IDENTIFICATION_WARNING, GENERICITY_SCOPE_WARNING]
    z0 = setup.z0_coefficients
    m = mu0(setup, budget)
    if not is_finite(m):
        warnings.append("mu0 is infinite: the sliced function has a non-isolated singularity")
        return LeInvariants(None, None, None, None, False, tuple(warnings), z0), None
    polar = polar_ideal(setup, budget)
    try:
        l0 = lambda0(setup, polar, budget)
        om = omega(setup, polar, budget, lambda0_value=l0)
        l1 = lambda1(setup, polar, budget)
    except GenericityError as exc:
        warnings.append(str(exc))
        return LeInvariants(m, None, None, None, False, tuple(warnings), z0), polar
    return LeInvariants(m, l0, l1, om, True, tuple(warnings), z0), polar


@dataclass(frozen=True)
class AnalysisResult:
    """A finished analysis: invariants plus the transformed-coordinates data."""

    invariants: LeInvariants
    setup: SliceSetup
    polar: Ideal | None
    slice_names: tuple[str, ...]


def slice_with_form(f: MultiPoly, coefficients: Sequence,
                    names: Sequence[str] | None = None) -> tuple[SliceSetup, tuple[str, ...]]:
    """Change coordinates so the given linear form becomes variable 0.

    Returns the setup and the new variable names (the slice variable is
    called ``w`` unless the form already is the first coordinate).
    """
    n = f.nvars
    coeffs = tuple(Fraction(c) for c in coefficients)
    if len(coeffs) != n:
        raise InputError("slice form needs one coefficient per variable")
    if not any(coeffs):
        raise InputError("slice form must be nonzero")
    if names is None:
        names = [f"x{i}" for i in range(n)]
    if coeffs == (1,) + (0,) * (n - 1):
        return SliceSetup(f, coeffs), tuple(names)
    pivot = next(i for i, c in enumerate(coeffs) if c)
    rest = [i for i in range(n) if i != pivot]
    # new coordinates: (w, untouched originals); old pivot variable solved from w
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for col, i in enumerate(rest, start=1):
        matrix[i][col] = Fraction(1)
    matrix[pivot][0] = 1 / coeffs[pivot]
    for col, i in enumerate(rest, start=1):
        matrix[pivot][col] = -coeffs[i] / coeffs[pivot]
    transformed = f.linear_change(matrix)
    new_names = ("w",) + tuple(names[i] for i in rest)
    return SliceSetup(transformed, coeffs), new_names


def _candidate_forms(nvars: int, seed: int, limit: int):
    for i in range(nvars):
        yield tuple(Fraction(1 if j == i else 0) for j in range(nvars))
    rng = random.Random(seed)
    produced = 0
    while produced < limit:
        form = tuple(Fraction(rng.randint(-5, 5)) for _ in range(nvars))
        if any(form):
            produced += 1
            yield form


def analyze_poly(f: MultiPoly, z0: Sequence | None = None, seed: int = 0,
                 budget: Budget | None = None, names: Sequence[str] | None = None,
                 max_candidates: int = 12) -> AnalysisResult:
    """Analyze f, choosing a slice form when none is given.

    Candidate forms are the coordinate forms first, then small pseudo-random
    integer forms drawn deterministically from the seed.  With an explicit
    ``z0`` no search happens; a failing form is reported, not retried.
    """
    if z0 is not None:
        setup, new_names = slice_with_form(f, z0, names)
        inv, polar = _pipeline(setup, budget)
        return AnalysisResult(inv, setup, polar, new_names)
    last: AnalysisResult | None = None
    for form in _candidate_forms(f.nvars, seed, max_candidates):
        setup, new_names = slice_with_form(f, form, names)
        inv, polar = _pipeline(setup, budget)
        last = AnalysisResult(inv, setup, polar, new_names)
        if inv.genericity_ok:
            return last
    assert last is not None
    return last
