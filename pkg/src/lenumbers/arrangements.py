"""Central hyperplane arrangements in C^3 as constraint-engine inputs.

The critical locus of a product of pairwise distinct linear forms through the
origin in C^3 is the union of the lines where at least two of the planes
meet.  Every such line is smooth, a generic slice meets it transversely, and
the local singularity at a slice point on a line contained in m planes is
homogeneous of degree m in two variables.  That turns an arrangement into a
fully explicit ``SingularSetup``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product as iter_product
from math import comb, gcd
from typing import Sequence

from .constraints import (
    ComponentData,
    ConstraintReport,
    Finding,
    SingularSetup,
    VERDICT_EXPONENTS,
    full_report,
)
from .cyclo import cyclo_product, divisors, homogeneous_char_exponents
from .errors import InputError, InvariantViolationError
from .polynomials import MultiPoly


@dataclass(frozen=True)
class CentralArrangement3:
    """A reduced central arrangement: pairwise non-proportional plane normals."""

    normals: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        normals = tuple(tuple(Fraction(v) for v in n) for n in self.normals)
        object.__setattr__(self, "normals", normals)
        if len(normals) < 2:
            raise InputError("an arrangement needs at least two planes")
        for n in normals:
            if len(n) != 3:
                raise InputError("normals must be triples")
            if not any(n):
                raise InputError("normals must be nonzero")
        for i in range(len(normals)):
            for j in range(i + 1, len(normals)):
                if not any(_cross(normals[i], normals[j])):
                    raise InputError(
                        f"normals {i} and {j} are proportional: repeated plane")

    @property
    def d0(self) -> int:
        return len(self.normals)


@dataclass(frozen=True)
class MultiplePoint:
    """A line of the critical locus: primitive direction plus plane count."""

    line: tuple[int, int, int]
    multiplicity: int


def _cross(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot(a: Sequence[Fraction], b: Sequence) -> Fraction:
    return sum(x * Fraction(y) for x, y in zip(a, b))


def _primitive_direction(v: Sequence[Fraction]) -> tuple[int, int, int]:
    denom = 1
    for c in v:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in v]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    lead = next(c for c in ints if c)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def multiple_points(arr: CentralArrangement3) -> tuple[MultiplePoint, ...]:
    """The distinct intersection lines, each with its plane count m >= 2.

    Every unordered pair of planes meets in exactly one line, so the counts
    satisfy sum C(m, 2) = C(d0, 2); this is asserted.
    """
    lines: dict[tuple[int, int, int], int] = {}
    for i in range(arr.d0):
        for j in range(i + 1, arr.d0):
            direction = _primitive_direction(_cross(arr.normals[i], arr.normals[j]))
            lines.setdefault(direction, 0)
    for direction in lines:
        lines[direction] = sum(1 for n in arr.normals if not _dot(n, direction))
    points = tuple(MultiplePoint(line, m) for line, m in sorted(lines.items()))
    if sum(comb(p.multiplicity, 2) for p in points) != comb(arr.d0, 2):
        raise InvariantViolationError("pair accounting failed over the multiple points")
    return points


def to_setup(arr: CentralArrangement3) -> SingularSetup:
    """Numeric slice data of the arrangement, with n = 2.

    A generic plane section is d0 distinct concurrent lines in C^2, so
    mu0 = (d0 - 1)^2; each critical line contributes a transverse singularity
    homogeneous of degree m with k = 1.
    """
    d0 = arr.d0
    components = tuple(
        ComponentData(k=1, mu=(p.multiplicity - 1) ** 2, d=p.multiplicity)
        for p in multiple_points(arr))
    return SingularSetup(n=2, mu0=(d0 - 1) ** 2, d0=d0, components=components)


def _slice_candidates():
    for bound in range(1, 20):
        box = range(-bound, bound + 1)
        candidates = [c for c in iter_product(box, box, box)
                      if any(c) and max(abs(v) for v in c) == bound]
        candidates.sort(key=lambda c: (sum(abs(v) for v in c),
                                       tuple(-v for v in c)))
        yield from candidates


def pick_slice_form(arr: CentralArrangement3) -> tuple[int, int, int]:
    """Deterministic small-integer form not vanishing on any critical line."""
    lines = [p.line for p in multiple_points(arr)]
    for candidate in _slice_candidates():
        if all(_dot([Fraction(v) for v in candidate], line) for line in lines):
            return candidate
    raise InvariantViolationError("no valid slice form found")  # unreachable: lines are finite


def validate_slice_form(arr: CentralArrangement3, form: Sequence) -> tuple[int, int, int]:
    coeffs = tuple(Fraction(c) for c in form)
    if len(coeffs) != 3 or not any(coeffs):
        raise InputError("slice form must be a nonzero triple")
    for p in multiple_points(arr):
        if not _dot(coeffs, p.line):
            raise InputError(
                f"slice form vanishes on the critical line {list(p.line)}; "
                "choose a form transverse to every line")
    return _primitive_direction(coeffs)


def defining_polynomial(arr: CentralArrangement3) -> MultiPoly:
    """The product of the linear forms, in variables (x, y, z)."""
    result = MultiPoly.constant(1, 3)
    for n in arr.normals:
        form = MultiPoly([((1, 0, 0), n[0]), ((0, 1, 0), n[1]), ((0, 0, 1), n[2])], 3)
        result = result * form
    return result


def arrangement_report(arr: CentralArrangement3,
                       z0: Sequence | None = None) -> ConstraintReport:
    """Constraint report for the arrangement, with per-k exponent ceilings.

    For every divisor k of d0 the exponent of Phi_k in the divisor bound is
    capped by a0 (k = 1) or b0 (k > 1) and by the exponent available in the
    component product; k surviving requires k to divide some local degree.
    """
    slice_form = (pick_slice_form(arr) if z0 is None
                  else validate_slice_form(arr, z0))
    setup = to_setup(arr)
    report = full_report(setup)
    a0, b0 = homogeneous_char_exponents(2, arr.d0)
    product = cyclo_product([setup.component_char(i)
                             for i in range(len(setup.components))])
    ceilings = {}
    for k in divisors(arr.d0):
        cap = a0 if k == 1 else b0
        ceilings[str(k)] = min(cap, product.exponent(k))
    bound = report.divisor_bound
    for k in divisors(arr.d0):
        if bound.exponent(k) != ceilings[str(k)]:
            raise InvariantViolationError("exponent ceilings disagree with the gcd bound")
    points = multiple_points(arr)
    extra = Finding(
        VERDICT_EXPONENTS,
        f"admissible cyclotomic exponents over the divisors of d0 = {arr.d0}: "
        + ", ".join(f"Phi_{k} <= {ceilings[str(k)]}" for k in divisors(arr.d0)),
        {
            "a0": a0,
            "b0": b0,
            "ceilings": ceilings,
            "d0": arr.d0,
            "lines": [list(p.line) for p in points],
            "line_multiplicities": [p.multiplicity for p in points],
            "slice_form": list(slice_form),
        })
    return replace(report, verdicts=report.verdicts + (extra,))
