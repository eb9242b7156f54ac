"""Reproduction checks for every published value the package can recompute."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .catalog import (
    bailey_even_family,
    bezout_certificate,
    bezout_link,
    c4_link,
    conway_two_bridge,
    figure1_link,
    hosokawa_reduced,
)
from .covers import CoverSpec, homology_orders, invariants_from_reduced, iwasawa_invariants, reduced_polynomial
from .expr import parse_poly
from .greenberg import Verdict, pseudonull
from .laurent import UniPoly
from .padic import shift_to_T, weierstrass_invariants


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    compute: Callable[[], Any]


def _lm(delta, z, p):
    inv = iwasawa_invariants(CoverSpec(delta, z, p))
    return inv.lambda_, inv.mu


def _wi(f, p):
    w = weierstrass_invariants(f, p)
    return w.lambda_, w.mu


def _hos(r, ell, m, p):
    inv = invariants_from_reduced(hosokawa_reduced(r, ell, m, p), p)
    return inv.lambda_, inv.mu


def checks() -> list:
    c4 = c4_link().delta
    out = [
        Check("C(4) reduced polynomial at z=(1,2)", (-1, 1, 0, -1, 1),
              lambda: reduced_polynomial(c4, (1, 2)).poly.coeffs),
        Check("C(4) shifted polynomial T((1+T)^3+1)", (0, 2, 3, 3, 1),
              lambda: shift_to_T(UniPoly((-1, 1)) * UniPoly((1, 0, 0, 1))).coeffs),
        Check("C(4) (lambda, mu) at p=2, z=(1,2)", (2, 0), lambda: _lm(c4, (1, 2), 2)),
        Check("C(4) orders n=0..4", [1, 1, 4, 16, 64],
              lambda: homology_orders(CoverSpec(c4, (1, 2), 2), 4).orders()),
        Check("figure1 family, m=9, p=3, z=(1,3)", (11, 2), lambda: _lm(figure1_link(9).delta, (1, 3), 3)),
        Check("figure1 family, m=1, p=5, z=(1,5)", (17, 0), lambda: _lm(figure1_link(1).delta, (1, 5), 5)),
        Check("C(8,12,-8) at p=2, z=(1,1)", (9, 1), lambda: _lm(conway_two_bridge(4, 6).delta, (1, 1), 2)),
        Check("C(4,2,-4) at p=2, z=(1,1)", (5, 0), lambda: _lm(conway_two_bridge(2, 1).delta, (1, 1), 2)),
        Check("C(4,2,-4) vanishing levels at p=2", (2,),
              lambda: iwasawa_invariants(CoverSpec(conway_two_bridge(2, 1).delta, (1, 1), 2)).vanishing_levels),
        Check("Hosokawa r=3, l=1, m=2, p=5", (4, 2), lambda: _hos(3, 1, 2, 5)),
        Check("Hosokawa r=2, l=2, m=1, p=2", (5, 1), lambda: _hos(2, 2, 1, 2)),
        Check("Trefoil orders n=0..4 at p=2", [1, 3, 3, 3, 3],
              lambda: homology_orders(CoverSpec(parse_poly("t^2-t+1", 1), (1,), 2), 4).orders()),
        Check("Trefoil (lambda, mu) at p=2", (0, 0),
              lambda: _wi(UniPoly((1, -1, 1)), 2)),
        Check("C(4) at p=3: lambda=1, mu=0 (l12 = 2)", (1, 0), lambda: _lm(c4, (1, 2), 3)),
    ]
    for ell in (1, 2, 3):
        for m in (0, 1, 2):
            fam = bailey_even_family(ell, m)
            out.append(Check(f"Bailey family l={ell}, m={m} at p=2", (2 + 2 * ell, m),
                             lambda fam=fam: _lm(fam.delta, fam.recommended_z, 2)))
    for m in (1, 2, 3, 4):
        out.append(Check(f"Bezout |Res(N,B)| for m={m}", 2 ** m, lambda m=m: abs(bezout_certificate(m).res)))
    for m in (1, 2):
        for s in (0, 1):
            out.append(Check(f"Bezout link m={m}, s={s} at p=2, z=(2,-1)", (2, m),
                             lambda m=m, s=s: _lm(bezout_link(m, s).delta, (2, -1), 2)))
    for m in (1, 2, 6):
        out.append(Check(f"figure1 family m={m} pseudonull", Verdict.PSEUDONULL.value,
                         lambda m=m: pseudonull(figure1_link(m).delta).verdict.value))
    for p, m, b in ((2, 1, 1), (2, 2, 3), (3, 1, 2)):
        out.append(Check(f"C(2*{p}^{m}, 2*{b}, -2*{p}^{m}) pseudonull", Verdict.PSEUDONULL.value,
                         lambda p=p, m=m, b=b: pseudonull(conway_two_bridge(p ** m, b).delta).verdict.value))
    out.append(Check("Trefoil is not pseudonull", Verdict.NOT_PSEUDONULL_KNOT.value,
                     lambda: pseudonull(parse_poly("t^2-t+1", 1)).verdict.value))
    return out


def run_checks():
    """Yield ``(check, computed, ok)``; exceptions count as failures."""
    for check in checks():
        try:
            got = check.compute()
        except Exception as exc:  # noqa: BLE001 - reported, not swallowed
            got = f"{type(exc).__name__}: {exc}"
        ok = got == check.expected or (isinstance(got, tuple) and list(got) == check.expected)
        yield check, got, ok
