import random

import pytest

from iwalink.errors import NotPrime, ZeroPolynomial
from iwalink.laurent import UniPoly
from iwalink.padic import (
    check_distinguished,
    check_prime,
    cyclotomic,
    cyclotomic_any,
    distinguished_part,
    shift_to_T,
    vp,
    weierstrass_invariants,
)

import oracles


def test_check_prime():
    assert check_prime(7) == 7
    for bad in (0, 1, 4, -3, 91):
        with pytest.raises(NotPrime):
            check_prime(bad)


def test_vp():
    assert vp(48, 2) == 4
    assert vp(-250, 5) == 3
    assert vp(7, 3) == 0
    assert vp(0, 3) == float("inf")
    assert vp(3 ** 4000 * 2, 3) == 4000


@pytest.mark.parametrize("p,n", [(2, 1), (2, 4), (3, 2), (5, 1), (7, 2)])
def test_cyclotomic_matches_naive(p, n):
    assert list(cyclotomic(p, n).coeffs) == oracles.cyclotomic_naive(p ** n)


@pytest.mark.parametrize("N", range(1, 31))
def test_cyclotomic_any(N):
    assert list(cyclotomic_any(N).coeffs) == oracles.cyclotomic_naive(N)


def test_shift_to_T():
    f = UniPoly((-1, 1)) * UniPoly((1, 0, 0, 1))
    assert shift_to_T(f).coeffs == (0, 2, 3, 3, 1)
    assert list(shift_to_T(f).coeffs) == oracles.shift(list(f.coeffs))


def test_weierstrass_examples():
    f = UniPoly((-1, 1)) * UniPoly((1, 0, 0, 1))
    w = weierstrass_invariants(f, 2)
    assert (w.lambda_, w.mu, w.lam) == (2, 0, 2)
    assert (weierstrass_invariants(f, 3).lambda_, weierstrass_invariants(f, 3).mu) == (1, 0)
    w = weierstrass_invariants(UniPoly((9, -18, 9)), 3)
    assert (w.lambda_, w.mu) == (2, 2)
    with pytest.raises(ZeroPolynomial):
        weierstrass_invariants(UniPoly(()), 2)


def test_weierstrass_random_vs_oracle():
    rng = random.Random(5)
    for _ in range(200):
        c = [rng.randint(-30, 30) for _ in range(rng.randint(1, 8))]
        if not any(c):
            continue
        p = rng.choice((2, 3, 5, 7))
        f = UniPoly(tuple(c))
        w = weierstrass_invariants(f, p)
        assert (w.lambda_, w.mu) == oracles.lambda_mu(list(f.coeffs), p)


def test_distinguished_examples():
    f = UniPoly((-1, 1)) * UniPoly((1, 0, 0, 1))
    dp = distinguished_part(f, 2, k=3)
    assert dp.coeffs == (0, 2, 1)
    assert check_distinguished(f, dp)
    dp = distinguished_part(UniPoly((1, 0, 1)), 2, k=4)
    assert dp.coeffs == (2, 2, 1)
    assert dp.modulus == 16 and dp.degree == 2


def test_distinguished_bruteforce_mod_8():
    rng = random.Random(11)
    checked = 0
    while checked < 40:
        c = tuple(rng.randint(-9, 9) for _ in range(rng.randint(2, 7)))
        f = UniPoly(c)
        if f.is_zero():
            continue
        lam, _ = oracles.lambda_mu(list(f.coeffs), 2)
        if lam > 4:
            continue
        dp = distinguished_part(f, 2, k=3)
        assert oracles.distinguished_bruteforce(list(f.coeffs), 2, 3) == [dp.coeffs]
        assert check_distinguished(f, dp)
        checked += 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_distinguished_at_minus_one_symmetric(p):
    # symmetric reduced polynomials of 2-component links have P(-1) = (-1)^lambda = -1 mod p
    f = UniPoly((-1, 1)) * UniPoly((1, 0, 0, 1))
    for extra in (UniPoly((1,)), UniPoly((1, -3, 1)), UniPoly((1, 2, 1))):
        g = f * extra
        dp = distinguished_part(g, p, k=4)
        assert dp.degree % 2 == 1
        assert dp.at_minus_one() % p == p - 1
