"""Sufficient criterion for pseudonullity of the unramified link module, on certified factorizations.

A factorization certificate lists prime factors of the Alexander polynomial.
The criterion is one-directional: if no prime factor takes the value ±1 at
``(1, ..., 1)`` the module is pseudonull; otherwise nothing is concluded
(``INCONCLUSIVE``), except for knots where the module is never pseudonull.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from sympy import factorint

from .errors import InvalidCertificate, NotDivisible, Unsupported
from .laurent import MultiLaurent, UniPoly, divide_exact, eval_ones, unit_associates
from .padic import cyclotomic_any

CATALOG_CERTIFIED = "CatalogCertified"
CALLER_ASSERTED = "CallerAsserted"


class Verdict(str, Enum):
    PSEUDONULL = "PseudonullByThm42"
    NOT_PSEUDONULL_KNOT = "NotPseudonullKnot"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Factor:
    poly: MultiLaurent
    multiplicity: int = 1
    primality: str = CATALOG_CERTIFIED
    label: str = ""


@dataclass(frozen=True)
class FactorizationCertificate:
    r: int
    factors: tuple
    integer_content: tuple = ()  # (prime, exponent) pairs
    source: Optional[MultiLaurent] = None

    def product(self) -> MultiLaurent:
        out = MultiLaurent.constant(1, self.r)
        for prime, e in self.integer_content:
            out = out * (prime ** e)
        for f in self.factors:
            out = out * f.poly ** f.multiplicity
        return out

    def verify(self, delta: Optional[MultiLaurent] = None) -> bool:
        target = delta if delta is not None else self.source
        if target is None:
            return True
        return unit_associates(self.product(), target)


@dataclass(frozen=True)
class PseudonullVerdict:
    verdict: Verdict
    witness: Optional[Factor] = None
    caller_asserted: bool = False


def _u_poly(g: MultiLaurent) -> Optional[UniPoly]:
    """If ``g`` is a polynomial in ``u = t1*...*tr`` with nonnegative powers, return it."""
    coeffs = {}
    for exp, c in g.items():
        k = exp[0]
        if any(e != k for e in exp) or k < 0:
            return None
        coeffs[k] = c
    top = max(coeffs, default=0)
    return UniPoly(tuple(coeffs.get(i, 0) for i in range(top + 1)))


def _u_to_multi(f: UniPoly, r: int) -> MultiLaurent:
    return MultiLaurent(r, {(i,) * r: c for i, c in enumerate(f.coeffs)})


def structured_factor(delta: MultiLaurent) -> FactorizationCertificate:
    """Factor content, ``(t_i - 1)`` powers and cyclotomic polynomials in ``u = t1*...*tr``.

    Every cyclotomic ``Phi_N(u)`` is prime in the Laurent ring: a monomial change of
    variables sends ``t1*...*tr`` to a single variable, where ``Phi_N`` is irreducible.
    Any other leftover shape raises :class:`Unsupported`.
    """
    if delta.is_zero():
        raise Unsupported("zero polynomial")
    r = delta.num_vars
    rest = delta.shift(tuple(-e for e in delta.min_exponents()))
    content = rest.content()
    rest = MultiLaurent(r, {e: c // content for e, c in rest.items()})
    factors = []
    for i in range(r):
        ti1 = MultiLaurent.var(i, r) - 1
        k = 0
        while True:
            try:
                rest = divide_exact(rest, ti1)
            except NotDivisible:
                break
            k += 1
        if k:
            factors.append(Factor(ti1, k, CATALOG_CERTIFIED, f"t{i + 1}-1"))
    rest = rest.shift(tuple(-e for e in rest.min_exponents()))
    g = _u_poly(rest)
    if g is None:
        raise Unsupported("remainder is not a polynomial in t1*...*tr")
    # phi(N) >= sqrt(N/2), so N <= 2 deg^2 covers every cyclotomic factor of degree <= deg
    N = 1
    while g.degree > 0 and N <= 2 * g.degree ** 2:
        phi = cyclotomic_any(N)
        k = 0
        while phi.degree <= g.degree and phi.divides(g):
            g = g.exact_div(phi)
            k += 1
        if k:
            factors.append(Factor(_u_to_multi(phi, r), k, CATALOG_CERTIFIED, f"Phi_{N}(u)"))
        N += 1
    if g.degree > 0:
        raise Unsupported("leftover factor in t1*...*tr is not cyclotomic")
    # g is now the constant ±1 (the content was removed first)
    primes = tuple(sorted(factorint(content).items())) if content > 1 else ()
    return FactorizationCertificate(r, tuple(factors), primes, delta)


def pseudonull_criterion(cert: FactorizationCertificate) -> PseudonullVerdict:
    if not cert.verify():
        raise InvalidCertificate("factors do not multiply back to delta up to a unit")
    asserted = any(f.primality == CALLER_ASSERTED for f in cert.factors)
    if cert.r == 1:
        return PseudonullVerdict(Verdict.NOT_PSEUDONULL_KNOT, None, asserted)
    for f in cert.factors:
        if abs(eval_ones(f.poly)) == 1:
            return PseudonullVerdict(Verdict.INCONCLUSIVE, f, asserted)
    # content primes evaluate to themselves, never ±1
    return PseudonullVerdict(Verdict.PSEUDONULL, None, asserted)


def pseudonull(delta: MultiLaurent) -> PseudonullVerdict:
    """Convenience: knots short-circuit; otherwise structured factorization then the criterion."""
    if delta.num_vars == 1:
        return PseudonullVerdict(Verdict.NOT_PSEUDONULL_KNOT)
    return pseudonull_criterion(structured_factor(delta))
