"""Dense univariate polynomial helpers over any coefficient domain.

Functions here work at element level (Fractions or FieldElement wrappers)
and power the Euclidean computations over extension fields; the raw GF(p)
kernel lives in :mod:`exactgeom.zpoly`.

Polynomials are lists of coefficients, low degree first, with no trailing
zeros; ``[]`` is the zero polynomial.
"""

from __future__ import annotations

from .domains import FiniteField

# --- element level -----------------------------------------------------------


def trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def deg(cs: list) -> int:
    return len(cs) - 1


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def sub(a: list, b: list, domain) -> list:
    out = list(a) + [domain.zero()] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return trim(out)


def neg(a: list) -> list:
    return [-c for c in a]


def scale(a: list, s) -> list:
    if not s:
        return []
    return [c * s for c in a]


def mul(a: list, b: list, domain) -> list:
    if not a or not b:
        return []
    out = [domain.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return trim(out)


def divmod_(a: list, b: list, domain) -> tuple[list, list]:
    """Quotient and remainder over a field; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = deg(b)
    inv_lead = domain.one() / b[-1]
    q = [domain.zero()] * max(0, len(a) - db)
    while deg(r) >= db and r:
        factor = r[-1] * inv_lead
        shift = deg(r) - db
        q[shift] = factor
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - factor * b[j]
        trim(r)
    return trim(q), r


def rem(a: list, b: list, domain) -> list:
    return divmod_(a, b, domain)[1]


def monic(a: list, domain) -> list:
    if not a:
        return []
    return scale(a, domain.one() / a[-1])


def gcd(a: list, b: list, domain) -> list:
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(a, b, domain)
    return monic(a, domain)


def eval_at(cs: list, x, domain):
    acc = domain.zero()
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def derivative(cs: list) -> list:
    return trim([i * c for i, c in enumerate(cs)][1:])


def squarefree_part(cs: list, domain) -> list:
    """Product of the distinct irreducible factors (monic).

    Valid in characteristic 0 or when the characteristic exceeds the degree,
    so that gcd(f, f') captures exactly the repeated part.
    """
    char = domain.char
    if char and char <= deg(cs):
        raise ValueError("squarefree part needs characteristic 0 or > deg")
    if deg(cs) <= 0:
        return monic(cs, domain)
    g = gcd(cs, derivative(cs), domain)
    return monic(divmod_(cs, g, domain)[0], domain)


def pow_mod(base: list, exponent: int, modulus: list, domain) -> list:
    result = [domain.one()]
    acc = rem(base, modulus, domain)
    while exponent:
        if exponent & 1:
            result = rem(mul(result, acc, domain), modulus, domain)
        exponent >>= 1
        if exponent:
            acc = rem(mul(acc, acc, domain), modulus, domain)
    return result


def _x(domain) -> list:
    return [domain.zero(), domain.one()]


def ff_factor_squarefree(cs: list, field: FiniteField, rng) -> list[list]:
    """Irreducible factors of a squarefree monic polynomial over a finite field.

    Distinct-degree splitting followed by Cantor-Zassenhaus; requires odd
    characteristic.  Deterministic given ``rng``.
    """
    f = monic(cs, field)
    if deg(f) <= 1:
        return [f] if deg(f) == 1 else []
    q = field.order
    x = _x(field)
    groups: list[tuple[list, int]] = []
    v = f
    h = x
    d = 0
    while deg(v) > 0:
        d += 1
        if 2 * d > deg(v):
            groups.append((v, deg(v)))
            break
        h = pow_mod(h, q, v, field)
        g = gcd(sub(h, x, field), v, field)
        if deg(g) > 0:
            groups.append((g, d))
            v = divmod_(v, g, field)[0]
            h = rem(h, v, field)
    factors: list[list] = []
    for product, degree_each in groups:
        factors.extend(_ff_equal_degree(product, degree_each, field, rng))
    factors.sort(key=lambda fac: (deg(fac), [repr(c) for c in fac]))
    return factors


def _ff_equal_degree(f: list, d: int, field: FiniteField, rng) -> list[list]:
    n = deg(f)
    if n == d:
        return [f]
    exponent = (field.order**d - 1) // 2
    while True:
        r = trim([field.rand(rng) for _ in range(n)])
        if deg(r) < 1:
            continue
        g = gcd(r, f, field)
        if 0 < deg(g) < n:
            break
        h = pow_mod(r, exponent, f, field)
        g = gcd(sub(h, [field.one()], field), f, field)
        if 0 < deg(g) < n:
            break
    other = divmod_(f, g, field)[0]
    return _ff_equal_degree(g, d, field, rng) + _ff_equal_degree(other, d, field, rng)


def ff_is_irreducible(cs: list, field: FiniteField) -> bool:
    """Rabin test at element level."""
    n = deg(cs)
    if n <= 0:
        return False
    if n == 1:
        return True
    f = monic(cs, field)
    q = field.order
    x = _x(field)
    probe = pow_mod(x, q**n, f, field)
    if trim(sub(probe, x, field)):
        return False
    primes = set()
    m, d = n, 2
    while d * d <= m:
        if m % d == 0:
            primes.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.add(m)
    for ell in primes:
        probe = pow_mod(x, q ** (n // ell), f, field)
        if deg(gcd(sub(probe, x, field), f, field)) > 0:
            return False
    return True
