"""Slow reference computations that share no code with the package."""

from __future__ import annotations

from itertools import product
from math import gcd


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def pmod_monic(a, m):
    """Remainder of ``a`` by a monic integer polynomial ``m``."""
    a = list(a)
    d = len(m) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for j in range(d + 1):
                a[i - d + j] -= c * m[j]
    return _trim(a[:d])


def cyclotomic_naive(N):
    """``Phi_N`` by dividing ``t^N - 1`` by ``Phi_d`` for every proper divisor ``d``."""
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            num = pdiv_exact(num, cyclotomic_naive(d))
    return num


def pdiv_exact(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        assert c % b[-1] == 0
        q[i] = c // b[-1]
        for j, y in enumerate(b):
            a[i + j] -= q[i] * y
    assert not any(a), "not divisible"
    return _trim(q)


def root_of_unity_norm(f, N):
    """``prod_{ord zeta = N} f(zeta)`` as ``prod_{gcd(k,N)=1} f(x^k)`` in ``Z[x]/(x^N - 1)``, reduced by ``Phi_N``."""
    acc = [1] + [0] * (N - 1)
    terms = [(i, c) for i, c in enumerate(f) if c]
    for k in range(1, N + 1):
        if gcd(k, N) != 1:
            continue
        nxt = [0] * N
        for i, a in enumerate(acc):
            if a:
                for j, c in terms:
                    nxt[(i + j * k) % N] += a * c
        acc = nxt
    acc = pmod_monic(_trim(acc), cyclotomic_naive(N))
    assert len(acc) <= 1, "norm must be a rational integer"
    return acc[0] if acc else 0


def cover_orders(f, p, n_max, base=1, v=0):
    """``order(n) = base * prod_{v < m <= n} |prod_{ord zeta = p^m} f(zeta)|``."""
    out = []
    order = base
    for n in range(n_max + 1):
        if n > v:
            order *= abs(root_of_unity_norm(f, p ** n))
        out.append(order if n >= v else None)
    return out


def vp(x, p):
    if x == 0:
        return None
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def shift(f):
    """Coefficients of ``f(1+T)`` by repeated synthetic Horner steps."""
    out = [0]
    for c in reversed(f):
        # out = out * (1+T) + c
        nxt = [0] * (len(out) + 1)
        for i, x in enumerate(out):
            nxt[i] += x
            nxt[i + 1] += x
        nxt[0] += c
        out = nxt
    return _trim(out)


def lambda_mu(f, p):
    a = shift(f)
    vals = [vp(c, p) for c in a]
    mu = min(v for v in vals if v is not None)
    lam = next(i for i, v in enumerate(vals) if v == mu)
    return lam, mu


def distinguished_bruteforce(f, p, k):
    """Every monic ``P = T^lam + (p * ...)`` mod ``p^k`` dividing ``p^-mu f(1+T)`` mod ``p^k``."""
    lam, mu = lambda_mu(f, p)
    mod = p ** k
    b = [(c // p ** mu) % mod for c in shift(f)]
    found = []
    choices = range(0, mod, p)
    for low in product(choices, repeat=lam):
        P = list(low) + [1]
        r = list(b)
        for i in range(len(r) - 1, lam - 1, -1):
            c = r[i] % mod
            if c:
                for j in range(lam + 1):
                    r[i - lam + j] = (r[i - lam + j] - c * P[j]) % mod
        if all(x % mod == 0 for x in r[:lam]):
            found.append(tuple(P))
    return found


def laurent_mul(f, g):
    """Naive product of ``{exponent tuple: coeff}`` maps."""
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}
