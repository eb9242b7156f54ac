import pytest

from iwalink import catalog
from iwalink.covers import (
    CoverSpec,
    homology_orders,
    invariants_from_reduced,
    iwasawa_invariants,
    knot_base_order,
    level_factor,
    norm_descent,
    orders_from_reduced,
    reduced_polynomial,
    stabilization_level,
    vanishing_levels,
)
from iwalink.errors import (
    BaseUnavailable,
    InvalidDirection,
    NotAKnotPolynomial,
    NotPrime,
    VariableMismatch,
    ZeroDirection,
    ZeroPolynomial,
)
from iwalink.expr import parse_poly
from iwalink.laurent import MultiLaurent, UniPoly, resultant
from iwalink.padic import cyclotomic

import oracles

C4 = parse_poly("t1*t2+1", 2)


def test_spec_validation():
    with pytest.raises(InvalidDirection):
        CoverSpec(C4, (2, 4), 2)
    with pytest.raises(ZeroDirection):
        CoverSpec(C4, (0, 1), 2)
    with pytest.raises(VariableMismatch):
        CoverSpec(C4, (1, 1, 1), 2)
    with pytest.raises(NotPrime):
        CoverSpec(C4, (1, 1), 6)
    assert CoverSpec(C4, (1, 4), 2).v == 2
    assert CoverSpec(C4, (1, -1), 3).v == 0


def test_reduced_polynomial():
    assert reduced_polynomial(C4, (1, 2)).poly.coeffs == (-1, 1, 0, -1, 1)
    knot = parse_poly("t^2-t+1", 1)
    assert reduced_polynomial(knot, (1,)).poly.coeffs == (1, -1, 1)
    with pytest.raises(ZeroPolynomial):
        reduced_polynomial(parse_poly("t1-t2", 2), (1, 1))


def test_norm_descent_is_norm():
    # h(t^p) = prod_k g(w^k t) over p-th roots of unity w
    g = UniPoly((3, -1, 4, 1, -5, 9))
    for p in (2, 3, 5):
        h = norm_descent(g, p)
        assert h.degree == g.degree
        assert g.divides(h.compose_power(p))
        assert abs(h(1)) == abs(g(1) * oracles.root_of_unity_norm(list(g.coeffs), p))


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_level_factor_vs_resultant(p, m):
    f = UniPoly((2, -7, 1, 0, 3, 1))
    assert level_factor(f, p, m) == abs(resultant(cyclotomic(p, m), f))
    assert level_factor(f, p, m) == abs(oracles.root_of_unity_norm(list(f.coeffs), p ** m))


def test_level_factor_with_content():
    f = UniPoly((6, -12, 6))
    assert level_factor(f, 3, 2) == abs(resultant(cyclotomic(3, 2), f))


def test_vanishing_levels():
    f = UniPoly((-1, 1)) * cyclotomic(2, 2) * cyclotomic(2, 3)
    assert vanishing_levels(f, 2) == [2, 3]
    assert vanishing_levels(f, 3) == []


def test_knot_base_order():
    trefoil = UniPoly((1, -1, 1))
    assert knot_base_order(trefoil, 2, 1) == 3
    assert knot_base_order(trefoil, 3, 1) == 4
    with pytest.raises(NotAKnotPolynomial):
        knot_base_order(UniPoly((2, 1)), 2, 1)


def test_c4_orders_and_nu():
    spec = CoverSpec(C4, (1, 2), 2)
    table = homology_orders(spec, 5)
    assert table.orders() == [1, 1, 4, 16, 64, 256]
    assert table.exponents() == [0, 0, 2, 4, 6, 8]
    inv = iwasawa_invariants(spec)
    assert (inv.lambda_, inv.mu, inv.nu, inv.v, inv.n0) == (2, 0, -2, 1, 3)


def test_base_from_component_polynomials():
    # base orders come from the component with v_p(z_i) = 0
    trefoil = UniPoly((1, -1, 1))
    spec = CoverSpec(C4, (1, 2), 2, (trefoil, UniPoly((1,))))
    assert homology_orders(spec, 1).orders() == [1, 3]
    spec = CoverSpec(C4, (2, 1), 2, (trefoil, UniPoly((1,))))
    assert homology_orders(spec, 1).orders() == [1, 1]


def test_base_unavailable_for_three_components():
    delta = parse_poly("t1*t2*t3+1", 3)
    spec = CoverSpec(delta, (2, 1, 1), 2)
    with pytest.raises(BaseUnavailable):
        homology_orders(spec, 2)
    inv = iwasawa_invariants(spec)
    assert inv.nu is None and inv.v == 1


def test_vanishing_makes_nu_undefined():
    fam = catalog.conway_two_bridge(2, 1)
    spec = CoverSpec(fam.delta, (1, 1), 2)
    inv = iwasawa_invariants(spec)
    assert inv.vanishing_levels == (2,) and inv.nu is None
    orders = homology_orders(spec, 4).orders()
    assert orders[1] != 0 and orders[2:] == [0, 0, 0]


def test_hopf_and_trefoil():
    for p in (2, 3, 5):
        spec = CoverSpec(MultiLaurent.constant(1, 2), (1, 1), p)
        assert homology_orders(spec, 3).orders() == [1, p, p * p, p ** 3]
    spec = CoverSpec(parse_poly("t^2-t+1", 1), (1,), 2)
    assert homology_orders(spec, 4).orders() == [1, 3, 3, 3, 3]


def test_stabilization_level():
    assert stabilization_level(2, 2, 1) == 3
    assert stabilization_level(0, 5, 0) == 1
    assert stabilization_level(77, 5, 2) == 3


def test_orders_from_reduced_requires_base_above_zero():
    with pytest.raises(BaseUnavailable):
        orders_from_reduced(UniPoly((-1, 1)), 2, 3, v=1)
    table = orders_from_reduced(UniPoly((-1, 1)), 2, 3, v=1, base_orders=[1, 2])
    assert table.orders() == [1, 2, 4, 8]


def test_invariants_from_reduced_matches_oracle():
    f = UniPoly((-1, 1)) ** 3 * UniPoly((1, 3, 1)) * 4
    inv = invariants_from_reduced(f, 2)
    assert (inv.lambda_, inv.mu) == oracles.lambda_mu(list(f.coeffs), 2)
    orders = oracles.cover_orders(list(f.coeffs), 2, inv.n0 + 2)
    e = [oracles.vp(o, 2) for o in orders]
    assert inv.nu == e[inv.n0] - inv.lambda_ * inv.n0 - inv.mu * 2 ** inv.n0


def test_threads_env_does_not_change_results(monkeypatch):
    spec = CoverSpec(catalog.figure1_link(9).delta, (1, 3), 3)
    monkeypatch.setenv("IWALINK_THREADS", "1")
    serial = homology_orders(spec, 5).orders()
    monkeypatch.setenv("IWALINK_THREADS", "0")
    assert homology_orders(spec, 5).orders() == serial
