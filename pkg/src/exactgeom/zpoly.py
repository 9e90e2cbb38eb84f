"""Raw univariate arithmetic and factorization over GF(p).

Polynomials are lists of ints in [0, p), low degree first, no trailing zeros
(``[]`` is zero).  This is the speed-critical kernel: multiplication packs
coefficients into one big integer (Kronecker substitution) so CPython's
integer multiply performs the convolution.
"""

from __future__ import annotations


def zp_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def zp_deg(cs: list[int]) -> int:
    return len(cs) - 1


def zp_add(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return zp_trim(out)


def zp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return zp_trim(out)


_KRONECKER_THRESHOLD = 16


def zp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) >= _KRONECKER_THRESHOLD:
        return _zp_mul_kronecker(a, b, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return zp_trim([c % p for c in out])


def _zp_mul_kronecker(a: list[int], b: list[int], p: int) -> list[int]:
    # slot width must exceed log2(min(len) * p^2) so packed sums cannot overlap
    bits = (min(len(a), len(b)) * p * p).bit_length() + 1
    mask = (1 << bits) - 1
    pa = sum(c << (bits * i) for i, c in enumerate(a))
    pb = sum(c << (bits * i) for i, c in enumerate(b))
    prod = pa * pb
    out = []
    for _ in range(len(a) + len(b) - 1):
        out.append((prod & mask) % p)
        prod >>= bits
    return zp_trim(out)


def zp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = zp_trim(list(a))
    db = zp_deg(b)
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(r) - db)
    while zp_deg(r) >= db and r:
        factor = r[-1] * inv_lead % p
        shift = zp_deg(r) - db
        q[shift] = factor
        for j in range(db + 1):
            r[shift + j] = (r[shift + j] - factor * b[j]) % p
        zp_trim(r)
    return zp_trim(q), r


def zp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    return zp_divmod(a, b, p)[1]


def zp_monic(a: list[int], p: int) -> list[int]:
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def zp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = zp_trim(list(a)), zp_trim(list(b))
    while b:
        a, b = b, zp_rem(a, b, p)
    return zp_monic(a, p)


def zp_inv_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Inverse of a modulo m (extended Euclid); a must be coprime to m."""
    r0, r1 = zp_trim(list(m)), zp_rem(a, m, p)
    t0, t1 = [], [1]
    while r1:
        q, r2 = zp_divmod(r0, r1, p)
        r0, r1 = r1, r2
        t0, t1 = t1, zp_sub(t0, zp_mul(q, t1, p), p)
    if zp_deg(r0) != 0:
        raise ZeroDivisionError("element is not invertible modulo the modulus")
    scale = pow(r0[0], p - 2, p)
    return [c * scale % p for c in t0]


def zp_derivative(cs: list[int], p: int) -> list[int]:
    return zp_trim([i * c % p for i, c in enumerate(cs)][1:])


def zp_squarefree_part(cs: list[int], p: int) -> list[int]:
    if p <= zp_deg(cs):
        raise ValueError("squarefree part needs characteristic > deg")
    if zp_deg(cs) <= 0:
        return zp_monic(cs, p)
    g = zp_gcd(cs, zp_derivative(cs, p), p)
    return zp_monic(zp_divmod(cs, g, p)[0], p)


def zp_pow_mod(base: list[int], exponent: int, modulus: list[int], p: int) -> list[int]:
    result = [1]
    acc = zp_rem(base, modulus, p)
    while exponent:
        if exponent & 1:
            result = zp_rem(zp_mul(result, acc, p), modulus, p)
        exponent >>= 1
        if exponent:
            acc = zp_rem(zp_mul(acc, acc, p), modulus, p)
    return result


def zp_eval(cs: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = (acc * x + c) % p
    return acc


def zp_factor_squarefree(cs: list[int], p: int, rng) -> list[list[int]]:
    """Irreducible factors of a squarefree polynomial over GF(p), p odd.

    Distinct-degree splitting followed by Cantor-Zassenhaus; output sorted by
    (degree, coefficients) so it is deterministic for a seeded rng.
    """
    f = zp_monic(cs, p)
    if zp_deg(f) <= 1:
        return [f] if zp_deg(f) == 1 else []
    x = [0, 1]
    groups: list[tuple[list[int], int]] = []
    v = f
    h = x
    d = 0
    while zp_deg(v) > 0:
        d += 1
        if 2 * d > zp_deg(v):
            groups.append((v, zp_deg(v)))
            break
        h = zp_pow_mod(h, p, v, p)
        g = zp_gcd(zp_sub(h, x, p), v, p)
        if zp_deg(g) > 0:
            groups.append((g, d))
            v = zp_divmod(v, g, p)[0]
            h = zp_rem(h, v, p)
    factors: list[list[int]] = []
    for product, degree_each in groups:
        factors.extend(_zp_equal_degree(product, degree_each, p, rng))
    factors.sort(key=lambda fac: (zp_deg(fac), fac))
    return factors


def _zp_equal_degree(f: list[int], d: int, p: int, rng) -> list[list[int]]:
    n = zp_deg(f)
    if n == d:
        return [f]
    exponent = (p**d - 1) // 2
    while True:
        r = zp_trim([rng.randrange(p) for _ in range(n)])
        if zp_deg(r) < 1:
            continue
        g = zp_gcd(r, f, p)
        if 0 < zp_deg(g) < n:
            break
        h = zp_pow_mod(r, exponent, f, p)
        g = zp_gcd(zp_sub(h, [1], p), f, p)
        if 0 < zp_deg(g) < n:
            break
    other = zp_divmod(f, g, p)[0]
    return _zp_equal_degree(g, d, p, rng) + _zp_equal_degree(other, d, p, rng)


def zp_is_irreducible(cs: list[int], p: int) -> bool:
    """Rabin irreducibility test over GF(p)."""
    n = zp_deg(cs)
    if n <= 0:
        return False
    if n == 1:
        return True
    f = zp_monic(cs, p)
    x = [0, 1]
    probe = zp_pow_mod(x, p**n, f, p)
    if zp_sub(probe, x, p):
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
        probe = zp_pow_mod(x, p ** (n // ell), f, p)
        if zp_deg(zp_gcd(zp_sub(probe, x, p), f, p)) > 0:
            return False
    return True
