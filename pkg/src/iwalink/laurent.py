"""Exact Laurent polynomial arithmetic over the integers.

Two representations live here:

* :class:`MultiLaurent` -- sparse, ``r`` variables, exponents of any sign.
  Holds multivariable Alexander polynomials.
* :class:`UniPoly` -- dense univariate polynomial with integer coefficients.
  Holds reduced polynomials, cyclotomic polynomials and shifted series.

All values are immutable.  Resultants are computed by the subresultant PRS;
:func:`resultant_sylvester` is an independent determinant-based check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

from .errors import BothZero, NotDivisible, VariableMismatch, ZeroDirection, ZeroPolynomial


class MultiLaurent:
    """Sparse Laurent polynomial in ``t1..tr`` with integer coefficients.

    ``terms`` maps exponent tuples of length ``num_vars`` to nonzero ints.
    """

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Sequence[int], int] | None = None):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise VariableMismatch(f"exponent {exp} has wrong length for r={num_vars}")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.num_vars = num_vars
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def constant(cls, c: int, num_vars: int) -> MultiLaurent:
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def var(cls, i: int, num_vars: int) -> MultiLaurent:
        """The variable ``t_{i+1}`` (0-based index)."""
        exp = [0] * num_vars
        exp[i] = 1
        return cls(num_vars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> MultiLaurent:
        return cls(len(exp), {tuple(exp): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponents(self) -> tuple:
        if not self._terms:
            return (0,) * self.num_vars
        return tuple(min(e[i] for e in self._terms) for i in range(self.num_vars))

    def max_exponents(self) -> tuple:
        if not self._terms:
            return (0,) * self.num_vars
        return tuple(max(e[i] for e in self._terms) for i in range(self.num_vars))

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def leading_term(self):
        """Lex-largest ``(exponent, coefficient)`` pair."""
        exp = max(self._terms)
        return exp, self._terms[exp]

    def shift(self, exp: Sequence[int]) -> MultiLaurent:
        """Multiply by the monomial ``t^exp``."""
        return MultiLaurent(
            self.num_vars,
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()},
        )

    def _check(self, other: MultiLaurent):
        if self.num_vars != other.num_vars:
            raise VariableMismatch(f"r={self.num_vars} vs r={other.num_vars}")

    def _coerce(self, other):
        if isinstance(other, int):
            return MultiLaurent.constant(other, self.num_vars)
        if isinstance(other, MultiLaurent):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiLaurent(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiLaurent(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise NotDivisible("negative power of a non-unit")
            (exp, c), = self._terms.items()
            return MultiLaurent(self.num_vars, {tuple(e * k for e in exp): c ** -k})
        result = MultiLaurent.constant(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.constant(other, self.num_vars)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, *values):
        """Evaluate at integer (or any ring) values; negative exponents need invertible values."""
        if len(values) != self.num_vars:
            raise VariableMismatch("wrong number of values")
        total = 0
        for exp, c in self._terms.items():
            term = c
            for x, e in zip(values, exp):
                term = term * (x ** e)
            total = total + term
        return total

    def __repr__(self):
        from .expr import format_poly

        return f"MultiLaurent({self.num_vars}, {format_poly(self)!r})"


@dataclass(frozen=True)
class UniPoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``t**i``."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> UniPoly:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> UniPoly:
        g = self.content()
        if g == 0:
            return self
        if self.lead < 0:
            g = -g
        return UniPoly(tuple(c // g for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = UniPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, k: int) -> UniPoly:
        """``f(t**k)`` for ``k >= 1``."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return UniPoly(tuple(out))

    def divmod_exact(self, other: UniPoly):
        """Exact-over-Z long division; raises :class:`NotDivisible` if any step leaves Z."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dg = other.degree
        lead = other.lead
        q = [0] * max(len(rem) - dg, 0)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise NotDivisible("non-integral quotient coefficient")
            q[i - dg] = qc
            for j, b in enumerate(other.coeffs):
                rem[i - dg + j] -= qc * b
        return UniPoly(tuple(q)), UniPoly(tuple(rem))

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise NotDivisible("nonzero remainder")
        return q

    def divides(self, other: UniPoly) -> bool:
        """True if ``self`` divides ``other`` in Z[t]."""
        try:
            other.exact_div(self)
        except NotDivisible:
            return False
        return True

    def __repr__(self):
        from .expr import format_unipoly

        return f"UniPoly({format_unipoly(self)!r})"


@dataclass(frozen=True)
class UnitNormalForm:
    """``sign * t**shift * poly`` with ``poly(0) != 0`` and a positive leading coefficient."""

    poly: UniPoly
    shift: int = 0
    sign: int = 1

    @property
    def reduced_degree(self) -> int:
        return self.poly.degree

    def laurent(self) -> MultiLaurent:
        """The original (un-normalized) one-variable Laurent polynomial."""
        return MultiLaurent(
            1, {(i + self.shift,): self.sign * c for i, c in enumerate(self.poly.coeffs)}
        )


def unit_normal(f: MultiLaurent | UniPoly) -> UnitNormalForm:
    """Strip the unit ``±t^k`` from a one-variable Laurent polynomial."""
    if isinstance(f, UniPoly):
        f = MultiLaurent(1, {(i,): c for i, c in enumerate(f.coeffs)})
    if f.num_vars != 1:
        raise VariableMismatch("unit_normal expects a one-variable polynomial")
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no unit normal form")
    lo = min(e[0] for e, _ in f.items())
    hi = max(e[0] for e, _ in f.items())
    dense = [0] * (hi - lo + 1)
    for (e,), c in f.items():
        dense[e - lo] = c
    sign = 1 if dense[-1] > 0 else -1
    return UnitNormalForm(UniPoly(tuple(sign * c for c in dense)), lo, sign)


def canonical_associate(f: MultiLaurent) -> MultiLaurent:
    """Representative of ``f`` modulo units ``±t^a``: minimal exponents zero, positive lex-leading coefficient."""
    if f.is_zero():
        return f
    g = f.shift(tuple(-e for e in f.min_exponents()))
    _, c = g.leading_term()
    return -g if c < 0 else g


def unit_associates(f: MultiLaurent, g: MultiLaurent) -> bool:
    return f.num_vars == g.num_vars and canonical_associate(f) == canonical_associate(g)


# ---------------------------------------------------------------------------
# module-level operations


def add(f: MultiLaurent, g: MultiLaurent) -> MultiLaurent:
    f._check(g)
    return f + g


def mul(f: MultiLaurent, g: MultiLaurent) -> MultiLaurent:
    f._check(g)
    return f * g


def divide_exact(f: MultiLaurent, g: MultiLaurent) -> MultiLaurent:
    """Return ``q`` with ``f == q * g``, or raise :class:`NotDivisible`.

    Both sides are shifted to genuine polynomials with no monomial factor;
    an exact Laurent quotient is then a polynomial, found by lex-order division.
    """
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return f
    r = f.num_vars
    fmin, gmin = f.min_exponents(), g.min_exponents()
    F = f.shift(tuple(-e for e in fmin))
    G = g.shift(tuple(-e for e in gmin))
    gexp, gc = G.leading_term()
    gmax = G.max_exponents()
    fmax = F.max_exponents()
    rem = dict(F.items())
    quot: dict = {}
    while rem:
        exp = max(rem)
        c = rem[exp]
        qexp = tuple(a - b for a, b in zip(exp, gexp))
        if any(e < 0 for e in qexp):
            raise NotDivisible("leading monomial not divisible")
        if any(q + m > fm for q, m, fm in zip(qexp, gmax, fmax)):
            raise NotDivisible("quotient degree exceeds dividend")
        qc, rr = divmod(c, gc)
        if rr:
            raise NotDivisible("leading coefficient not divisible")
        quot[qexp] = qc
        for e, b in G.items():
            key = tuple(a + b_ for a, b_ in zip(qexp, e))
            v = rem.get(key, 0) - qc * b
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    shift = tuple(a - b for a, b in zip(fmin, gmin))
    return MultiLaurent(r, quot).shift(shift)


def specialize(f: MultiLaurent, z: Sequence[int]) -> UnitNormalForm:
    """Substitute ``t_i -> t**z_i`` and return the unit-normal one-variable result."""
    if len(z) != f.num_vars:
        raise VariableMismatch(f"direction has length {len(z)}, expected {f.num_vars}")
    if any(zi == 0 for zi in z):
        raise ZeroDirection("every direction entry must be nonzero")
    terms: dict = {}
    for exp, c in f.items():
        k = sum(e * zi for e, zi in zip(exp, z))
        terms[(k,)] = terms.get((k,), 0) + c
    return unit_normal(MultiLaurent(1, terms))


def eval_ones(f: MultiLaurent) -> int:
    return sum(c for _, c in f.items())


def involution(f: MultiLaurent) -> MultiLaurent:
    """``t_i -> t_i**-1`` for every variable."""
    return MultiLaurent(f.num_vars, {tuple(-e for e in exp): c for exp, c in f.items()})


# ---------------------------------------------------------------------------
# resultants


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of dense coefficient lists (low degree first)."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    rem = list(a)
    for i in range(da, db - 1, -1):
        c = rem[i]
        rem = [x * lb for x in rem]
        if c:
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _content(c: list) -> int:
    g = 0
    for x in c:
        g = gcd(g, x)
    return g


def resultant(f: UniPoly, g: UniPoly) -> int:
    """``Res(f, g) = lead(f)**deg(g) * prod(g(x) for x a root of f)`` via subresultant PRS."""
    if f.is_zero() and g.is_zero():
        raise BothZero("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return 0
    A, B = list(f.coeffs), list(g.coeffs)
    da, db = len(A) - 1, len(B) - 1
    if da == 0:
        return A[0] ** db
    if db == 0:
        return B[0] ** da
    s = 1
    if da < db:
        A, B, da, db = B, A, db, da
        if da % 2 and db % 2:
            s = -s
    a, b = _content(A), _content(B)
    A = [x // a for x in A]
    B = [x // b for x in B]
    t = a ** db * b ** da
    g_, h = 1, 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        div = g_ * h ** delta
        B = [x // div for x in R]
        g_ = A[-1]
        if delta:
            h = g_ ** delta // h ** (delta - 1)
        if len(B) == 1:
            break
    da = len(A) - 1
    h = B[0] ** da // h ** (da - 1) if da >= 1 else 1
    return s * t * h


def bareiss_det(m: list) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list:
    """``deg g`` shifted rows of ``f`` followed by ``deg f`` shifted rows of ``g``, highest degree first."""
    m, n = f.degree, g.degree
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def resultant_sylvester(f: UniPoly, g: UniPoly) -> int:
    """Resultant as the determinant of the Sylvester matrix."""
    if f.is_zero() and g.is_zero():
        raise BothZero("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return 0
    return bareiss_det(sylvester_matrix(f, g))
