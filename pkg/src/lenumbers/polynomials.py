"""Exact polynomial arithmetic over the rationals and the integers.

Multivariate polynomials are immutable sparse maps from exponent tuples to
nonzero ``Fraction`` coefficients.  Univariate integer polynomials are
immutable coefficient tuples, lowest degree first.  No floating point is used
anywhere: intersection multiplicities and divisibility are exact statements.

The canonical term order for printing and equality is graded lexicographic,
so printed forms are deterministic and ``parse_poly`` inverts ``to_string``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import InputError, PolyParseError

Monomial = tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponent vector of x^a / x^b; the caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


def _grlex_key(m: Monomial) -> tuple[int, Monomial]:
    return (mono_deg(m), m)


class MultiPoly:
    """Immutable multivariate polynomial with exact rational coefficients.

    Terms map exponent tuples (one entry per variable) to nonzero Fractions;
    the zero polynomial has an empty term map.  Arithmetic returns new
    objects; instances are safe to share between threads.
    """

    __slots__ = ("_terms", "nvars")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]], nvars: int):
        if nvars < 1:
            raise InputError("a polynomial needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise InputError(f"bad exponent vector {mono!r} for {nvars} variable(s)")
            c = clean.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean
        self.nvars = nvars

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], nvars: int) -> "MultiPoly":
        # internal fast path: terms must already be canonical
        p = object.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, value, nvars: int) -> "MultiPoly":
        c = Fraction(value)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise InputError(f"variable index {index} out of range for {nvars} variable(s)")
        exps = [0] * nvars
        exps[index] = 1
        return cls._raw({tuple(exps): Fraction(1)}, nvars)

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """The internal term map; callers must not mutate it."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Maximum total degree of a term, or -1 for the zero polynomial."""
        return max((mono_deg(m) for m in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def _combine(self, other: "MultiPoly", sign: int) -> "MultiPoly":
        if self.nvars != other.nvars:
            raise InputError("variable counts differ")
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, Fraction(0)) + sign * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(out, self.nvars)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        return self._combine(other, 1)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self._combine(other, -1)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if self.nvars != other.nvars:
                raise InputError("variable counts differ")
            out: dict[Monomial, Fraction] = {}
            for ma, ca in self._terms.items():
                for mb, cb in other._terms.items():
                    m = mono_mul(ma, mb)
                    v = out.get(m, Fraction(0)) + ca * cb
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
            return MultiPoly._raw(out, self.nvars)
        c = Fraction(other)
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw({m: co * c for m, co in self._terms.items()}, self.nvars)

    def __rmul__(self, other) -> "MultiPoly":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise InputError("negative polynomial power")
        result = MultiPoly.constant(1, self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def term_mul(self, mono: Monomial, coeff: Fraction) -> "MultiPoly":
        """Multiply by the single term coeff * x^mono."""
        if not self._terms or not coeff:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(
            {mono_mul(m, mono): c * coeff for m, c in self._terms.items()}, self.nvars
        )

    def partial(self, index: int) -> "MultiPoly":
        """Formal partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.nvars:
            raise InputError(f"variable index {index} out of range for {self.nvars} variable(s)")
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m[index]
            if e:
                lowered = m[:index] + (e - 1,) + m[index + 1:]
                out[lowered] = c * e
        return MultiPoly._raw(out, self.nvars)

    def restrict_first_var(self) -> "MultiPoly":
        """Substitute 0 for variable 0 and drop that coordinate."""
        if self.nvars < 2:
            raise InputError("restriction needs at least two variables")
        out = {m[1:]: c for m, c in self._terms.items() if m[0] == 0}
        return MultiPoly._raw(out, self.nvars - 1)

    def insert_var(self, position: int = 0) -> "MultiPoly":
        """Reinterpret in one more variable, with exponent 0 at ``position``."""
        if not 0 <= position <= self.nvars:
            raise InputError("bad insertion position")
        out = {m[:position] + (0,) + m[position:]: c for m, c in self._terms.items()}
        return MultiPoly._raw(out, self.nvars + 1)

    def evaluate(self, values: Sequence) -> Fraction:
        vals = [Fraction(v) for v in values]
        if len(vals) != self.nvars:
            raise InputError("wrong number of values")
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for e, v in zip(m, vals):
                if e:
                    term *= v ** e
            total += term
        return total

    def linear_change(self, matrix: Sequence[Sequence]) -> "MultiPoly":
        """Compose with the substitution z -> M z.

        Variable i is replaced by the linear form given by row i of M.  The
        matrix must be square of size nvars and invertible.
        """
        n = self.nvars
        rows = [[Fraction(v) for v in row] for row in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InputError("matrix size must match the variable count")
        if not _det(rows):
            raise InputError("singular matrix in linear change of coordinates")
        images = [
            MultiPoly([((0,) * j + (1,) + (0,) * (n - j - 1), rows[i][j]) for j in range(n)], n)
            for i in range(n)
        ]
        powers: list[list[MultiPoly]] = [[MultiPoly.constant(1, n)] for _ in range(n)]
        result = MultiPoly.zero(n)
        for m, c in self._terms.items():
            term = MultiPoly.constant(c, n)
            for i, e in enumerate(m):
                cache = powers[i]
                while len(cache) <= e:
                    cache.append(cache[-1] * images[i])
                term = term * cache[e]
            result = result + term
        return result

    def primitive(self) -> "MultiPoly":
        """Scale to coprime integer coefficients, leading (grlex) one positive."""
        if not self._terms:
            return self
        denom = 1
        for c in self._terms.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        numer = 0
        for c in self._terms.values():
            numer = gcd(numer, (c * denom).numerator)
        scale = Fraction(denom, numer)
        lead = max(self._terms, key=_grlex_key)
        if self._terms[lead] < 0:
            scale = -scale
        return MultiPoly._raw({m: c * scale for m, c in self._terms.items()}, self.nvars)

    def to_string(self, names: Sequence[str] | None = None) -> str:
        """Render in graded-lex descending order; output re-parses exactly."""
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise InputError("wrong number of variable names")
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for m in sorted(self._terms, key=_grlex_key, reverse=True):
            c = self._terms[m]
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_string()!r}, nvars={self.nvars})"


def _det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    a = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


# ---------------------------------------------------------------------------
# univariate integer polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Univariate polynomial over the integers, coefficients lowest first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def t_power_minus_one(cls, k: int) -> "UniPoly":
        """t^k - 1."""
        if k < 1:
            raise InputError("exponent must be positive")
        return cls((-1,) + (0,) * (k - 1) + (1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        """Exact quotient in Z[t]; raises InputError if division is inexact."""
        if divisor.is_zero:
            raise InputError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        out = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise InputError("inexact division in Z[t]")
            out[i - dd] = q
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] -= q * b
        if any(rem):
            raise InputError("inexact division in Z[t]")
        return UniPoly(out)

    def evaluate(self, value: Fraction) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_positive(self) -> "UniPoly":
        """Divide by the content and force a positive leading coefficient."""
        if self.is_zero:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return UniPoly(c // g for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                body = str(abs(c))
            elif e == 1:
                body = "t" if abs(c) == 1 else f"{abs(c)}*t"
            else:
                body = f"t^{e}" if abs(c) == 1 else f"{abs(c)}*t^{e}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def unipoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q scaled to primitive integer form, leading coefficient positive."""
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]

    def trim(p: list[Fraction]) -> list[Fraction]:
        while p and not p[-1]:
            p.pop()
        return p

    fa, fb = trim(fa), trim(fb)
    while fb:
        # remainder of fa by fb over Q
        while len(fa) >= len(fb) and fa:
            factor = fa[-1] / fb[-1]
            shift = len(fa) - len(fb)
            for i, c in enumerate(fb):
                fa[shift + i] -= factor * c
            trim(fa)
        fa, fb = fb, fa
    if not fa:
        return UniPoly()
    denom = 1
    for c in fa:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return UniPoly((c * denom).numerator for c in fa).primitive_positive()


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[+\-*^()/])")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {ch!r}", pos)
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group()), pos))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group(), pos))
        else:
            tokens.append((m.group(), m.group(), pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _PolyParser:
    """Recursive-descent parser for +, -, *, ^ expressions over named variables.

    Rational literals are written p/q; '/' is not a general operator and
    implicit multiplication is not accepted.
    """

    def __init__(self, text: str, names: Sequence[str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = list(names)
        self.index = {name: i for i, name in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise InputError("duplicate variable names")
        self.nvars = len(self.names)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            raise PolyParseError(f"expected {kind!r}", tok[2])
        return tok

    def parse(self) -> MultiPoly:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolyParseError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self) -> MultiPoly:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MultiPoly:
        value = self.unary()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self) -> MultiPoly:
        tok = self.peek()
        if tok[0] in ("+", "-"):
            self.take()
            inner = self.unary()
            return inner if tok[0] == "+" else -inner
        return self.factor()

    def factor(self) -> MultiPoly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise PolyParseError("exponent must be a nonnegative integer", tok[2])
            return base ** tok[1]
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        if tok[0] == "num":
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take()
                if den[0] != "num" or den[1] == 0:
                    raise PolyParseError("denominator must be a nonzero integer", den[2])
                value /= den[1]
            return MultiPoly.constant(value, self.nvars)
        if tok[0] == "name":
            idx = self.index.get(tok[1])
            if idx is None:
                raise PolyParseError(f"unknown variable {tok[1]!r}", tok[2])
            return MultiPoly.variable(idx, self.nvars)
        if tok[0] == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolyParseError(f"unexpected token {tok[1]!r}", tok[2])


def parse_poly(text: str, names: Sequence[str]) -> MultiPoly:
    """Parse an expression over the named variables into canonical expanded form."""
    return _PolyParser(text, names).parse()
