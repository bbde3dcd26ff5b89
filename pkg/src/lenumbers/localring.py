"""Local computations at the origin of affine space over Q.

The ambient ring is the localization of Q[x_1..x_n] at the origin, so a
polynomial is a unit exactly when its constant term is nonzero.  Monomial
orders are anti-graded (1 is the largest monomial), division is Mora's weak
normal form with ecart bookkeeping, and standard bases are computed by
S-polynomial completion.  Colengths of zero-dimensional ideals realize
intersection multiplicities and Milnor numbers.

Blowups are caught by hard resource budgets: exceeding a budget raises
``ResourceLimitError``; a wrong answer is never returned instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Iterable, Sequence

from .errors import InputError, InvariantViolationError, ResourceLimitError
from .polynomials import (
    Monomial,
    MultiPoly,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
)


class Infinite:
    """Singleton marker for an infinite colength."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = Infinite()


def is_finite(value) -> bool:
    return value is not INFINITE


@dataclass
class Budget:
    """Hard caps on standard-basis work; exceeding one is an error."""

    max_pairs: int = 100_000
    max_monomials: int = 1_000_000
    pairs_used: int = 0
    monomials_used: int = 0

    def tick_pair(self) -> None:
        self.pairs_used += 1
        if self.pairs_used > self.max_pairs:
            raise ResourceLimitError(f"S-pair budget of {self.max_pairs} exhausted")

    def tick_monomials(self, count: int) -> None:
        self.monomials_used += count
        if self.monomials_used > self.max_monomials:
            raise ResourceLimitError(f"monomial budget of {self.max_monomials} exhausted")


class LocalOrder:
    """Anti-graded lexicographic order: lower total degree is larger, ties lex.

    1 is the largest monomial and the order is compatible with multiplication,
    so a polynomial is a local unit iff its leading monomial is 1.
    """

    ntags = 0

    def key(self, m: Monomial):
        return (-mono_deg(m), m)

    def __repr__(self) -> str:
        return "LocalOrder()"


class EliminationOrder(LocalOrder):
    """Tag-variable block compared globally first, then LocalOrder on the rest.

    Any monomial containing a tag variable beats every tag-free monomial, so a
    standard basis with respect to this order eliminates the tag block.
    """

    def __init__(self, ntags: int):
        if ntags < 1:
            raise InputError("need at least one tag variable")
        self.ntags = ntags

    def key(self, m: Monomial):
        t, z = m[: self.ntags], m[self.ntags:]
        return (mono_deg(t), t, -mono_deg(z), z)

    def __repr__(self) -> str:
        return f"EliminationOrder(ntags={self.ntags})"


def leading(p: MultiPoly, order: LocalOrder) -> tuple[Monomial, Fraction]:
    """Leading (monomial, coefficient) of a nonzero polynomial."""
    m = max(p.terms, key=order.key)
    return m, p.terms[m]


def _ecart(p: MultiPoly, lm: Monomial) -> int:
    return p.total_degree() - mono_deg(lm)


class _Reducer:
    __slots__ = ("poly", "lm", "lc", "ecart", "src", "unit", "quots")

    def __init__(self, poly, lm, lc, ecart, src, unit=None, quots=None):
        self.poly = poly
        self.lm = lm
        self.lc = lc
        self.ecart = ecart
        self.src = src  # index into the original generators, or None for an added remainder
        self.unit = unit
        self.quots = quots


def _mora(f: MultiPoly, gens: Sequence[MultiPoly], order: LocalOrder,
          budget: Budget | None, track: bool):
    n = f.nvars
    reducers: list[_Reducer] = []
    for idx, g in enumerate(gens):
        if g.is_zero:
            continue
        lm, lc = leading(g, order)
        reducers.append(_Reducer(g, lm, lc, _ecart(g, lm), idx))
    h = f
    unit = MultiPoly.constant(1, n) if track else None
    quots = [MultiPoly.zero(n) for _ in gens] if track else None
    while not h.is_zero:
        lm_h, lc_h = leading(h, order)
        candidates = [r for r in reducers if mono_divides(r.lm, lm_h)]
        if not candidates:
            break
        e_h = _ecart(h, lm_h)
        red = min(candidates, key=lambda r: r.ecart)
        if red.ecart > e_h:
            # remember the current remainder so later reductions stay local
            reducers.append(_Reducer(
                h, lm_h, lc_h, e_h, None,
                unit if track else None,
                list(quots) if track else None,
            ))
        fac_mono = mono_div(lm_h, red.lm)
        fac_coeff = lc_h / red.lc
        h = h - red.poly.term_mul(fac_mono, fac_coeff)
        if track:
            if red.src is not None:
                bump = MultiPoly._raw({fac_mono: fac_coeff}, n)
                quots[red.src] = quots[red.src] + bump
            else:
                unit = unit - red.unit.term_mul(fac_mono, fac_coeff)
                quots = [q - rq.term_mul(fac_mono, fac_coeff)
                         for q, rq in zip(quots, red.quots)]
        if budget is not None:
            budget.tick_monomials(max(1, len(h.terms)))
    return h, unit, quots


def mora_reduce(f: MultiPoly, gens: Sequence[MultiPoly],
                order: LocalOrder | None = None,
                budget: Budget | None = None) -> MultiPoly:
    """Mora weak normal form of f against gens.

    The remainder r satisfies u*f = (combination of gens) + r for some local
    unit u.  When gens is a standard basis, r == 0 iff f lies in the ideal
    generated by gens in the local ring.  Termination is guaranteed by the
    ecart-based reducer selection.
    """
    r, _, _ = _mora(f, list(gens), order or LocalOrder(), budget, track=False)
    return r


def mora_divide(f: MultiPoly, gens: Sequence[MultiPoly],
                order: LocalOrder | None = None,
                budget: Budget | None = None):
    """Mora division with witnesses: returns (r, u, q) with u*f = sum(q_i*g_i) + r.

    u is a local unit with constant term 1; the identity is exact and can be
    checked term by term.
    """
    gens = list(gens)
    return _mora(f, gens, order or LocalOrder(), budget, track=True)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: LocalOrder) -> MultiPoly:
    lm_f, lc_f = leading(f, order)
    lm_g, lc_g = leading(g, order)
    lcm = mono_lcm(lm_f, lm_g)
    return (f.term_mul(mono_div(lcm, lm_f), 1 / lc_f)
            - g.term_mul(mono_div(lcm, lm_g), 1 / lc_g))


# ---------------------------------------------------------------------------
# ideals and standard bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """An ideal of the local ring, presented by polynomial generators."""

    generators: tuple[MultiPoly, ...]
    nvars: int

    def __post_init__(self):
        for g in self.generators:
            if g.nvars != self.nvars:
                raise InputError("generators must share the variable count")

    @property
    def is_zero_ideal(self) -> bool:
        return not self.generators

    def to_strings(self, names: Sequence[str] | None = None) -> list[str]:
        return [g.to_string(names) for g in self.generators]

    def __repr__(self) -> str:
        return f"Ideal([{', '.join(self.to_strings())}], nvars={self.nvars})"


def ideal(gens: Iterable[MultiPoly], nvars: int | None = None) -> Ideal:
    """Normalize generators: drop zeros, scale to primitive form, deduplicate."""
    cleaned: list[MultiPoly] = []
    seen = set()
    for g in gens:
        if nvars is None:
            nvars = g.nvars
        if g.is_zero:
            continue
        g = g.primitive()
        if g not in seen:
            seen.add(g)
            cleaned.append(g)
    if nvars is None:
        raise InputError("cannot infer the variable count of an empty ideal")
    return Ideal(tuple(cleaned), nvars)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    """Concatenated generators, normalized; realizes scheme intersection."""
    if a.nvars != b.nvars:
        raise InputError("ideals live in different rings")
    return ideal(list(a.generators) + list(b.generators), a.nvars)


@dataclass(frozen=True)
class StandardBasis:
    """A completed local standard basis together with its leading staircase."""

    basis: tuple[MultiPoly, ...]
    order: LocalOrder
    staircase: tuple[Monomial, ...]
    nvars: int

    def contains(self, f: MultiPoly, budget: Budget | None = None) -> bool:
        """Ideal membership in the local ring via Mora reduction."""
        return mora_reduce(f, self.basis, self.order, budget).is_zero


def _minimal_monomials(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    unique = sorted(set(monos))
    minimal = [m for m in unique
               if not any(o != m and mono_divides(o, m) for o in unique)]
    return tuple(minimal)


def standard_basis(I: Ideal, order: LocalOrder | None = None,
                   budget: Budget | None = None) -> StandardBasis:
    """Complete the generators to a standard basis under the given local order.

    Pair selection is deterministic: minimal degree of the leading-monomial
    lcm, then first-created order.  No pair criteria are applied; every
    S-polynomial is reduced, which is safe for local and mixed orders.
    """
    order = order or LocalOrder()
    budget = budget if budget is not None else Budget()
    G = [g for g in I.generators if not g.is_zero]
    if not G:
        return StandardBasis((), order, (), I.nvars)
    lms = [leading(g, order)[0] for g in G]
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        budget.tick_pair()
        best = min(pairs, key=lambda ij: (mono_deg(mono_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.remove(best)
        i, j = best
        s = s_polynomial(G[i], G[j], order)
        if s.is_zero:
            continue
        r = mora_reduce(s, G, order, budget)
        if r.is_zero:
            continue
        r = r.primitive()
        G.append(r)
        lms.append(leading(r, order)[0])
        new = len(G) - 1
        pairs.extend((k, new) for k in range(new))
    return StandardBasis(tuple(G), order, _minimal_monomials(lms), I.nvars)


def colength(I: Ideal | StandardBasis, budget: Budget | None = None):
    """Dimension over Q of the local ring modulo the ideal, or INFINITE.

    Counts the standard monomials (those outside the leading ideal).  The
    count is finite iff the staircase contains a pure power of every
    variable; otherwise some axis direction escapes and INFINITE is returned.
    """
    budget = budget if budget is not None else Budget()
    sb = I if isinstance(I, StandardBasis) else standard_basis(I, budget=budget)
    stair = sb.staircase
    if not stair:
        return INFINITE  # zero ideal: the whole local ring
    if any(mono_deg(m) == 0 for m in stair):
        return 0  # unit ideal
    bounds = []
    for v in range(sb.nvars):
        pure = [m[v] for m in stair if all(e == 0 for i, e in enumerate(m) if i != v)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    box = 1
    for b in bounds:
        box *= b
    budget.tick_monomials(box)
    count = 0
    for mono in iter_product(*(range(b) for b in bounds)):
        if not any(mono_divides(s, mono) for s in stair):
            count += 1
    return count


def _unit_collapse(gens: list[MultiPoly], nvars: int) -> Ideal:
    # in the local ring a nonzero constant term makes a generator a unit
    if any(g.constant_term() for g in gens):
        return ideal([MultiPoly.constant(1, nvars)], nvars)
    return ideal(gens, nvars)


def ideal_quotient(I: Ideal, g: MultiPoly, budget: Budget | None = None) -> Ideal:
    """The colon ideal (I : g) in the local ring.

    Computed by intersecting I with (g) through a tag variable under a mixed
    elimination order, followed by Mora division of each intersection
    generator by g; the division quotients generate (I : g) because the
    division unit is invertible in the local ring.
    """
    if g.is_zero:
        raise InputError("quotient by the zero element")
    if I.is_zero_ideal:
        return I
    if g.nvars != I.nvars:
        raise InputError("element and ideal live in different rings")
    budget = budget if budget is not None else Budget()
    n = I.nvars
    tag = MultiPoly.variable(0, n + 1)
    one = MultiPoly.constant(1, n + 1)
    lifted = [tag * f.insert_var(0) for f in I.generators]
    lifted.append((one - tag) * g.insert_var(0))
    sb = standard_basis(ideal(lifted, n + 1), EliminationOrder(1), budget)
    quotient_gens: list[MultiPoly] = []
    local = LocalOrder()
    for h in sb.basis:
        if any(m[0] for m in h.terms):
            continue
        h_low = h.restrict_first_var()
        r, _, quots = mora_divide(h_low, [g], local, budget)
        if not r.is_zero:
            raise InvariantViolationError("intersection element failed to divide by g")
        quotient_gens.append(quots[0])
    return _unit_collapse(quotient_gens, n)


def saturate(I: Ideal, g: MultiPoly, budget: Budget | None = None,
             max_rounds: int = 64) -> Ideal:
    """The saturation (I : g^infinity), by iterating the colon until stable.

    Stability is certified by standard-basis membership of every new
    generator; the chain (I : g) ⊆ (I : g^2) ⊆ ... stabilizes because the
    local ring is Noetherian.
    """
    if g.is_zero:
        raise InputError("saturation by the zero element")
    budget = budget if budget is not None else Budget()
    current = ideal(I.generators, I.nvars)
    for _ in range(max_rounds):
        nxt = ideal_quotient(current, g, budget)
        if nxt.is_zero_ideal:
            return nxt
        sb = standard_basis(current, budget=budget)
        if all(sb.contains(q, budget) for q in nxt.generators):
            return current
        current = nxt
    raise ResourceLimitError(f"saturation did not stabilize within {max_rounds} rounds")


def ideals_equal(a: Ideal, b: Ideal, budget: Budget | None = None) -> bool:
    """Equality as ideals of the local ring, by mutual membership."""
    sa = standard_basis(a, budget=budget)
    sb = standard_basis(b, budget=budget)
    return (all(sa.contains(g, budget) for g in b.generators)
            and all(sb.contains(g, budget) for g in a.generators))
