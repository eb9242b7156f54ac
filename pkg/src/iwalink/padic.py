"""p-adic valuations, cyclotomic polynomials and Weierstrass data of ``f(1+T)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from sympy import isprime

from .errors import NotPrime, ZeroPolynomial
from .laurent import UniPoly, UnitNormalForm

INFINITY = math.inf


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not isprime(p):
        raise NotPrime(f"{p!r} is not a prime")
    return p


def vp(x: int, p: int):
    """Exponent of ``p`` in ``x``; :data:`INFINITY` for ``x == 0``."""
    check_prime(p)
    return _vp(x, p)


def _vp(x: int, p: int):
    if x == 0:
        return INFINITY
    x = abs(x)
    v = 0
    # divide by p, p^2, p^4, ... so huge orders cost O(log v) big divisions per pass
    while x % p == 0:
        pw, e = p, 1
        while True:
            q, r = divmod(x, pw)
            if r:
                break
            x, v = q, v + e
            pw, e = pw * pw, e * 2
    return v


@lru_cache(maxsize=None)
def cyclotomic(p: int, n: int) -> UniPoly:
    """``Phi_{p^n}(t) = sum_{i<p} t**(i*p**(n-1))`` for ``n >= 1``."""
    check_prime(p)
    if n < 1:
        raise ValueError("level must be at least 1")
    step = p ** (n - 1)
    coeffs = [0] * ((p - 1) * step + 1)
    for i in range(p):
        coeffs[i * step] = 1
    return UniPoly(tuple(coeffs))


@lru_cache(maxsize=None)
def cyclotomic_any(N: int) -> UniPoly:
    """The N-th cyclotomic polynomial for arbitrary ``N >= 1``."""
    if N < 1:
        raise ValueError("N must be positive")
    f = UniPoly((-1,) + (0,) * (N - 1) + (1,))
    for d in range(1, N):
        if N % d == 0:
            f = f.exact_div(cyclotomic_any(d))
    return f


def _coeffs(f) -> tuple:
    if isinstance(f, UnitNormalForm):
        return f.poly.coeffs
    return f.coeffs


def shift_to_T(f: UniPoly | UnitNormalForm) -> UniPoly:
    """Coefficients of ``f(1+T)``."""
    c = _coeffs(f)
    out = [0] * len(c)
    for i, a in enumerate(c):
        if a:
            for j in range(i + 1):
                out[j] += a * comb(i, j)
    return UniPoly(tuple(out))


@dataclass(frozen=True)
class WeierstrassData:
    mu: int
    lambda_: int
    shifted_degree: int

    @property
    def lam(self) -> int:
        return self.lambda_


def weierstrass_invariants(f: UniPoly | UnitNormalForm, p: int) -> WeierstrassData:
    """``mu`` is the least valuation among the coefficients of ``f(1+T)``; ``lambda`` the first index attaining it."""
    check_prime(p)
    shifted = shift_to_T(f)
    if shifted.is_zero():
        raise ZeroPolynomial("f is zero")
    vals = [_vp(a, p) for a in shifted.coeffs]
    mu = min(vals)
    return WeierstrassData(int(mu), vals.index(mu), shifted.degree)


# ---------------------------------------------------------------------------
# distinguished polynomial modulo p^k


def _series_mul(a, b, n, mod):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return [v % mod for v in out]


def _series_inv(a, n, mod):
    inv0 = pow(a[0], -1, mod)
    out = [0] * n
    out[0] = inv0
    for k in range(1, n):
        s = 0
        for j in range(1, min(k, len(a) - 1) + 1):
            s += a[j] * out[k - j]
        out[k] = (-s * inv0) % mod
    return out


@dataclass(frozen=True)
class DistinguishedPart:
    """Distinguished polynomial ``P`` (and unit ``U``) of ``f(1+T) = p^mu * P * U``, all mod ``p^k``.

    ``unit`` is a truncation of the power series ``U`` to ``len(unit)`` terms.
    """

    p: int
    k: int
    mu: int
    coeffs: tuple
    unit: tuple

    @property
    def modulus(self) -> int:
        return self.p ** self.k

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def at_minus_one(self) -> int:
        """``P(-1)`` reduced to the symmetric range mod ``p^k``."""
        m = self.modulus
        v = sum(c * (-1) ** i for i, c in enumerate(self.coeffs)) % m
        return v - m if v > m // 2 else v


def distinguished_part(f: UniPoly | UnitNormalForm, p: int, k: int = 8) -> DistinguishedPart:
    """Weierstrass division of ``T^lambda`` by ``b = p^-mu f(1+T)``, carried out mod ``p^k``.

    Writing ``b = B + T^lambda V`` with ``deg B < lambda`` (so ``B = 0 mod p``) and ``V`` a unit,
    the quotient ``q`` of ``T^lambda = q b + R`` satisfies ``qV = sum_j (-tau(B V^-1 .))^j 1``
    where ``tau`` drops the lowest ``lambda`` coefficients.  Each application gains a factor
    ``p`` and loses ``lambda`` degrees of precision, so ``k`` terms on series of length
    ``(k+1)*lambda + extra`` suffice.  Then ``P = q b`` and ``U = q^-1``.
    """
    check_prime(p)
    if k < 1:
        raise ValueError("precision must be at least 1")
    wd = weierstrass_invariants(f, p)
    lam, mu = wd.lambda_, wd.mu
    mod = p ** k
    scale = p ** mu
    b = [(a // scale) % mod for a in shift_to_T(f).coeffs]
    extra = len(b) + 1
    n = (k + 1) * lam + extra
    B = b[:lam]
    V = (b[lam:] + [0] * n)[:n]
    Vinv = _series_inv(V, n, mod)
    BV = _series_mul(B + [0] * n, Vinv, n, mod)
    Q = [1] + [0] * (n - 1)
    term = list(Q)
    for _ in range(k):
        prod = _series_mul(term, BV, n, mod)
        term = [(-x) % mod for x in prod[lam:]] + [0] * lam
        Q = [(x + y) % mod for x, y in zip(Q, term)]
    q = _series_mul(Q, Vinv, n, mod)
    qb = _series_mul(q, b + [0] * n, n, mod)
    P = qb[:lam] + [1]
    U = _series_inv(q, extra, mod)
    return DistinguishedPart(p, k, mu, tuple(P), tuple(U))


def check_distinguished(f: UniPoly | UnitNormalForm, dp: DistinguishedPart) -> bool:
    """Back-multiplication: ``P * U == p^-mu f(1+T)`` mod ``p^k`` on the stored truncation."""
    mod = dp.modulus
    scale = dp.p ** dp.mu
    b = [(a // scale) % mod for a in shift_to_T(f).coeffs]
    n = len(dp.unit)
    lhs = _series_mul(list(dp.coeffs), list(dp.unit), n, mod)
    rhs = (b + [0] * n)[:n]
    monic = dp.coeffs[-1] == 1
    reduced = all(c % dp.p == 0 for c in dp.coeffs[:-1])
    return monic and reduced and lhs == rhs
