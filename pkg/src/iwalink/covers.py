"""Homology orders of the p^n-fold branched covers along a direction ``z``, and lambda/mu/nu."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .errors import (
    BaseUnavailable,
    InvalidDirection,
    NotAKnotPolynomial,
    StabilizationFailure,
    VariableMismatch,
    ZeroDirection,
    ZeroPolynomial,
)
from .laurent import MultiLaurent, UniPoly, UnitNormalForm, resultant, specialize, unit_normal
from .padic import _vp, check_prime, cyclotomic, weierstrass_invariants


@dataclass(frozen=True)
class CoverSpec:
    delta: MultiLaurent
    z: tuple
    p: int
    component_knot_polys: Optional[tuple] = None

    def __post_init__(self):
        z = tuple(int(x) for x in self.z)
        object.__setattr__(self, "z", z)
        check_prime(self.p)
        if len(z) != self.delta.num_vars:
            raise VariableMismatch(f"z has length {len(z)} but r={self.delta.num_vars}")
        if any(x == 0 for x in z):
            raise ZeroDirection("every z_i must be nonzero")
        g = 0
        for x in z:
            g = gcd(g, x)
        if g != 1:
            raise InvalidDirection(f"gcd(z) = {g}, expected 1")
        if self.component_knot_polys is not None:
            polys = tuple(self.component_knot_polys)
            if len(polys) != len(z):
                raise VariableMismatch("need one component polynomial per component")
            object.__setattr__(self, "component_knot_polys", polys)

    @property
    def r(self) -> int:
        return self.delta.num_vars

    @property
    def v(self) -> int:
        return max(_vp(x, self.p) for x in self.z)


@dataclass(frozen=True)
class GrowthRow:
    n: int
    order: int
    e: Optional[int]


@dataclass(frozen=True)
class GrowthTable:
    rows: tuple

    def orders(self) -> list:
        return [row.order for row in self.rows]

    def exponents(self) -> list:
        return [row.e for row in self.rows]


@dataclass(frozen=True)
class IwasawaInvariants:
    lambda_: int
    mu: int
    nu: Optional[int]
    v: int
    n0: int
    vanishing_levels: tuple = ()
    reduced: Optional[UnitNormalForm] = field(default=None, compare=False)


def reduced_polynomial(delta: MultiLaurent, z: Sequence[int]) -> UnitNormalForm:
    """``(t-1) * delta(t^z1, ..., t^zr)`` for ``r >= 2``; ``delta`` itself (at ``z = ±1``) when ``r == 1``."""
    try:
        spec = specialize(delta, z)
    except ZeroPolynomial:
        raise ZeroPolynomial("the reduced polynomial vanishes; invariants are undefined") from None
    if delta.num_vars == 1:
        return spec
    return unit_normal(UniPoly((-1, 1)) * spec.poly)


def vanishing_levels(f: UniPoly | UnitNormalForm, p: int) -> list:
    """All ``n >= 1`` with ``Phi_{p^n}`` dividing ``f``; complete by the degree bound."""
    check_prime(p)
    f = _poly(f)
    if f.is_zero():
        raise ZeroPolynomial("f is zero")
    out = []
    n = 1
    while (p - 1) * p ** (n - 1) <= f.degree:
        if cyclotomic(p, n).divides(f):
            out.append(n)
        n += 1
    return out


def knot_base_order(delta_k: UniPoly | UnitNormalForm, p: int, n: int) -> int:
    """``|prod_{zeta^(p^n)=1} delta_k(zeta)|`` for a knot polynomial (``delta_k(1) = ±1``)."""
    check_prime(p)
    f = _poly(delta_k)
    if abs(f(1)) != 1:
        raise NotAKnotPolynomial(f"delta_K(1) = {f(1)}, expected ±1")
    order = 1
    for factor in _LevelFactors(f, p).upto(n):
        order *= factor
    return order


def _poly(f) -> UniPoly:
    return f.poly if isinstance(f, UnitNormalForm) else f


def _threads() -> int:
    raw = os.environ.get("IWALINK_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_exact_div(a: list, b: list) -> list:
    q = UniPoly(tuple(a)).exact_div(UniPoly(tuple(b)))
    return list(q.coeffs)


def _poly_det(m: list) -> list:
    """Bareiss determinant of a square matrix over Z[s] (entries are coefficient lists)."""
    n = len(m)
    a = [[_trim(list(x)) for x in row] for row in m]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return []
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _trim(_poly_sub(_poly_mul(a[i][j], piv), _poly_mul(a[i][k], a[k][j])))
                a[i][j] = _poly_exact_div(num, prev) if num else []
            a[i][k] = []
        prev = piv
    det = a[n - 1][n - 1]
    return [sign * c for c in det]


def norm_descent(g: UniPoly, p: int) -> UniPoly:
    """``h`` with ``h(t^p) = prod_{k<p} g(w^k t)``, ``w`` a primitive p-th root of unity.

    This is the norm from ``Z[t]`` down to ``Z[s]``, ``s = t^p``: the determinant of
    multiplication by ``g`` on the basis ``1, t, ..., t^(p-1)`` with ``t^p = s``.
    For ``ord(eta) = p^(m-1) >= p`` the p-th roots of ``eta`` are exactly the
    primitive ``p^m``-th roots above it, so ``prod_{ord zeta = p^m} g(zeta)``
    equals ``prod_{ord eta = p^(m-1)} h(eta)``.
    """
    parts = [[] for _ in range(p)]
    for i, c in enumerate(g.coeffs):
        q, j = divmod(i, p)
        part = parts[j]
        part.extend([0] * (q + 1 - len(part)))
        part[q] = c
    # column j of the matrix is t^j * g in the basis t^0..t^(p-1)
    mat = [[[] for _ in range(p)] for _ in range(p)]
    for j in range(p):
        for i in range(p):
            k = i + j
            if k < p:
                mat[k][j] = parts[i]
            else:
                mat[k - p][j] = [0] + parts[i] if parts[i] else []
    return UniPoly(tuple(_poly_det(mat)))


class _LevelFactors:
    """``|Res(Phi_{p^m}, f)|`` for ``m = 1, 2, ...`` via repeated norm descent.

    ``level(m) = |Res(Phi_p, h_{m-1})|`` where ``h_0 = f`` and ``h_j = norm_descent(h_{j-1})``.
    Cheaper than a resultant against ``Phi_{p^m}`` directly since degrees never grow.
    """

    def __init__(self, f: UniPoly, p: int):
        self.p = p
        # the content contributes |c|^phi(p^m); keeping it out keeps the descent small
        self._content = f.content() or 1
        self._chain = [f.primitive_part()]
        self._phi_p = cyclotomic(p, 1)

    def _descend_to(self, j: int) -> UniPoly:
        while len(self._chain) <= j:
            self._chain.append(norm_descent(self._chain[-1], self.p))
        return self._chain[j]

    def level(self, m: int) -> int:
        deg_phi = (self.p - 1) * self.p ** (m - 1)
        return self._content ** deg_phi * abs(resultant(self._phi_p, self._descend_to(m - 1)))

    def levels(self, lo: int, hi: int) -> list:
        """Factors for levels ``lo..hi`` (inclusive), in order."""
        if hi < lo:
            return []
        self._descend_to(hi - 1)
        ms = list(range(lo, hi + 1))
        workers = min(_threads(), len(ms))
        if workers <= 1:
            return [self.level(m) for m in ms]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(self.level, ms))

    def upto(self, n: int) -> list:
        return self.levels(1, n)


def level_factor(f: UniPoly | UnitNormalForm, p: int, m: int) -> int:
    """``|prod_{ord zeta = p^m} f(zeta)| = |Res(Phi_{p^m}, f)|``."""
    check_prime(p)
    if m < 1:
        raise ValueError("level must be at least 1")
    return _LevelFactors(_poly(f), p).level(m)


def _base_orders(spec: CoverSpec, upto: int) -> list:
    """Orders for ``0 <= n <= upto`` (``upto <= v``): branched covers along the p-unit component."""
    if upto == 0:
        return [1]
    if spec.r > 2:
        raise BaseUnavailable(f"r={spec.r} with v={spec.v} > 0: base cover order unknown")
    if spec.r == 1:
        raise AssertionError("knots have v = 0")
    polys = spec.component_knot_polys or (UniPoly((1,)), UniPoly((1,)))
    unit_index = next(i for i, zi in enumerate(spec.z) if _vp(zi, spec.p) == 0)
    knot = _poly(polys[unit_index])
    if abs(knot(1)) != 1:
        raise NotAKnotPolynomial(f"component polynomial has value {knot(1)} at 1")
    factors = _LevelFactors(knot, spec.p).upto(upto)
    out = [1]
    for fac in factors:
        out.append(out[-1] * fac)
    return out


def orders_from_reduced(
    reduced: UniPoly | UnitNormalForm, p: int, n_max: int, v: int = 0, base_orders=None
) -> GrowthTable:
    """Growth table from a reduced polynomial: ``order(n) = order(v) * prod_{v<m<=n} level(m)``.

    ``base_orders`` lists the orders for ``0..v``; it defaults to ``[1]`` when ``v == 0``.
    """
    check_prime(p)
    f = _poly(reduced)
    if f.is_zero():
        raise ZeroPolynomial("reduced polynomial is zero")
    if base_orders is None:
        if v:
            raise BaseUnavailable("base orders required when v > 0")
        base_orders = [1]
    base_orders = list(base_orders)
    rows = []
    for n in range(min(n_max, v) + 1):
        o = base_orders[n]
        rows.append(GrowthRow(n, o, _vp(o, p)))
    order = base_orders[v]
    for m, fac in zip(range(v + 1, n_max + 1), _LevelFactors(f, p).levels(v + 1, n_max)):
        order *= fac
        rows.append(GrowthRow(m, order, _vp(order, p) if order else None))
    return GrowthTable(tuple(rows))


def homology_orders(spec: CoverSpec, n_max: int) -> GrowthTable:
    f = reduced_polynomial(spec.delta, spec.z)
    v = spec.v
    return orders_from_reduced(f, spec.p, n_max, v, _base_orders(spec, v))


def stabilization_level(lam: int, p: int, v: int) -> int:
    """``max(v+1, least n with p^(n-1)(p-1) > lam)``."""
    n = 1
    while (p - 1) * p ** (n - 1) <= lam:
        n += 1
    return max(v + 1, n)


def invariants_from_reduced(
    reduced: UniPoly | UnitNormalForm, p: int, v: int = 0, base_orders=None, check_levels: int = 3
) -> IwasawaInvariants:
    check_prime(p)
    f = _poly(reduced)
    if f.is_zero():
        raise ZeroPolynomial("reduced polynomial is zero")
    wd = weierstrass_invariants(f, p)
    lam, mu = wd.lambda_, wd.mu
    n0 = stabilization_level(lam, p, v)
    vanish = tuple(n for n in vanishing_levels(f, p) if n > v)
    red = reduced if isinstance(reduced, UnitNormalForm) else unit_normal(f)
    if vanish or (v and base_orders is None):
        return IwasawaInvariants(lam, mu, None, v, n0, vanish, red)
    table = orders_from_reduced(f, p, n0 + check_levels - 1, v, base_orders)
    nus = {row.e - lam * row.n - mu * p ** row.n for row in table.rows if row.n >= n0}
    if len(nus) != 1:
        raise StabilizationFailure(f"e_n - lambda*n - mu*p^n not constant from n0={n0}: {sorted(nus)}")
    return IwasawaInvariants(lam, mu, nus.pop(), v, n0, vanish, red)


def iwasawa_invariants(spec: CoverSpec, check_levels: int = 3) -> IwasawaInvariants:
    """lambda and mu from ``f(1+T)``; nu read off the growth table at ``n0 .. n0+check_levels-1``.

    ``nu`` is ``None`` when some level above ``v`` vanishes, or when ``r >= 3`` and
    ``v > 0`` (no base order available).
    """
    f = reduced_polynomial(spec.delta, spec.z)
    v = spec.v
    try:
        base = _base_orders(spec, v)
    except BaseUnavailable:
        base = None
    return invariants_from_reduced(f, spec.p, v, base, check_levels)
