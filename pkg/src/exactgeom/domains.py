"""Exact coefficient domains: the rationals, prime fields, and extension towers.

Three kinds of domain are supported:

* ``Rationals`` -- elements are plain :class:`fractions.Fraction` values.
* ``PrimeField(p)`` -- the field with p elements, p an odd prime below 2**31.
  Elements are :class:`FieldElement` wrappers around ints in ``[0, p)``.
* ``ExtensionField(base, modulus)`` -- ``base[t]/(m(t))`` for a monic
  irreducible ``m`` over ``base``.  The base may itself be an extension,
  so towers (needed for "adjoin a square root" constructions) come for free.
  Elements wrap a tuple of base raw values, low degree first.

All elements support ``+ - * / **`` and compare exactly; there is no floating
point anywhere.  Domains and elements are immutable and safe to share.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Optional

from . import zpoly
from .errors import DomainMismatchError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3_215_031_751."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers.  Elements are ``Fraction`` values."""

    char = 0
    order = None

    _instance: Optional["Rationals"] = None

    def __new__(cls) -> "Rationals":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def elem(self, value) -> Fraction:
        return Fraction(value)

    def coeff_str(self, value: Fraction) -> str:
        return str(value)

    def sqrt(self, value: Fraction) -> Optional[Fraction]:
        """Exact rational square root, or None if no rational root exists."""
        if value < 0:
            return None
        n, d = value.numerator, value.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def rand(self, rng, span: int = 100) -> Fraction:
        return Fraction(rng.randrange(-span, span + 1))

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Rationals")


QQ = Rationals()


class FieldElement:
    """An element of a finite field, wrapping the field and its raw value."""

    __slots__ = ("field", "value")

    def __init__(self, field: "FiniteField", value) -> None:
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DomainMismatchError(
                    f"elements of {self.field!r} and {other.field!r} cannot be combined"
                )
            return other.value
        if isinstance(other, int):
            return self.field._rfrom_int(other)
        return NotImplemented

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._radd(self.value, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._rsub(self.value, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._rsub(raw, self.value))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._rmul(self.value, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._rmul(self.value, self.field._rinv(raw)))

    def __rtruediv__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._rmul(raw, self.field._rinv(self.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field._rneg(self.value))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = FieldElement(self.field, self.field._rinv(self.value))
            exponent = -exponent
        result = self.field.one()
        acc = base
        while exponent:
            if exponent & 1:
                result = result * acc
            exponent >>= 1
            if exponent:
                acc = acc * acc
        return result

    def __bool__(self) -> bool:
        return not self.field._ris_zero(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field._rfrom_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return self.field.coeff_str(self)


class FiniteField:
    """Common behaviour for prime fields and extension towers.

    Subclasses provide raw-value arithmetic (``_radd`` and friends); public
    operations work on :class:`FieldElement` wrappers.
    """

    char: int
    order: int

    def zero(self) -> FieldElement:
        return FieldElement(self, self._rzero())

    def one(self) -> FieldElement:
        return FieldElement(self, self._rfrom_int(1))

    def elem(self, value: int) -> FieldElement:
        return FieldElement(self, self._rfrom_int(value))

    def wrap(self, raw) -> FieldElement:
        return FieldElement(self, raw)

    def rand(self, rng) -> FieldElement:
        return FieldElement(self, self._rrand(rng))

    def _element_iter(self) -> Iterator[FieldElement]:
        """Deterministic enumeration of all field elements."""
        for n in range(self.order):
            yield FieldElement(self, self._rfrom_index(n))

    def _nonresidue(self) -> FieldElement:
        """Smallest (in enumeration order) quadratic non-residue."""
        half = (self.order - 1) // 2
        one = self.one()
        for candidate in self._element_iter():
            if candidate and candidate**half != one:
                return candidate
        raise ArithmeticError("no quadratic non-residue found")  # unreachable for odd order

    def sqrt(self, a: FieldElement) -> Optional[FieldElement]:
        """A square root of ``a`` in this field, or None if ``a`` is a non-square.

        Uses the exponentiation shortcut when the order is 3 mod 4 and
        Tonelli-Shanks otherwise.  Deterministic.
        """
        if a.field != self:
            raise DomainMismatchError("sqrt of an element from a different field")
        if not a:
            return self.zero()
        q = self.order
        if q % 2 == 0:
            raise ValueError("square roots unsupported in characteristic 2")
        one = self.one()
        if a ** ((q - 1) // 2) != one:
            return None
        if q % 4 == 3:
            return a ** ((q + 1) // 4)
        # Tonelli-Shanks
        exp, two_power = q - 1, 0
        while exp % 2 == 0:
            exp //= 2
            two_power += 1
        z = self._nonresidue()
        m = two_power
        c = z**exp
        t = a**exp
        r = a ** ((exp + 1) // 2)
        while t != one:
            i, probe = 0, t
            while probe != one:
                probe = probe * probe
                i += 1
            b = c ** (1 << (m - i - 1))
            m = i
            c = b * b
            t = t * c
            r = r * b
        return r

    def coeff_str(self, a: FieldElement) -> str:
        raise NotImplementedError


class PrimeField(FiniteField):
    """The field of integers modulo an odd prime p, 2 < p < 2**31."""

    __slots__ = ("p",)

    def __init__(self, p: int) -> None:
        if not (2 < p < 2**31):
            raise ValueError(f"prime field characteristic must satisfy 2 < p < 2**31, got {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def _rzero(self) -> int:
        return 0

    def _ris_zero(self, a: int) -> bool:
        return a == 0

    def _rfrom_int(self, n: int) -> int:
        return n % self.p

    def _rfrom_index(self, n: int) -> int:
        return n % self.p

    def _radd(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def _rsub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def _rmul(self, a: int, b: int) -> int:
        return a * b % self.p

    def _rneg(self, a: int) -> int:
        return -a % self.p

    def _rinv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def _rrand(self, rng) -> int:
        return rng.randrange(self.p)

    def coeff_str(self, a: FieldElement) -> str:
        return str(a.value)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))


class ExtensionField(FiniteField):
    """``base[t]/(m(t))`` for a monic irreducible modulus m over ``base``.

    Raw values are tuples of ``degree`` base raw values, low degree first.
    ``base`` may itself be an ExtensionField, giving towers; ``order`` and
    ``char`` are computed through the tower.
    """

    __slots__ = ("base", "modulus", "degree", "name", "_order")

    def __init__(self, base: FiniteField, modulus, name: str = "t", *, check: bool = True) -> None:
        mod = tuple(c.value if isinstance(c, FieldElement) else base._rfrom_int(c) for c in modulus)
        while mod and base._ris_zero(mod[-1]):
            mod = mod[:-1]
        if len(mod) < 3:
            raise ValueError("extension modulus must have degree at least 2")
        if mod[-1] != base._rfrom_int(1):
            raise ValueError("extension modulus must be monic")
        self.base = base
        self.modulus = mod
        self.degree = len(mod) - 1
        self.name = name
        self._order = base.order**self.degree
        if check and not _modulus_irreducible(base, mod):
            raise ValueError("extension modulus is reducible over the base field")

    @property
    def char(self) -> int:
        return self.base.char

    @property
    def order(self) -> int:
        return self._order

    def generator(self) -> FieldElement:
        """The class of the adjoined variable t."""
        raw = [self.base._rzero()] * self.degree
        raw[1] = self.base._rfrom_int(1)
        return FieldElement(self, tuple(raw))

    def from_base(self, a: FieldElement) -> FieldElement:
        """Embed an element of the base field."""
        if a.field != self.base:
            raise DomainMismatchError("from_base expects an element of the base field")
        raw = [self.base._rzero()] * self.degree
        raw[0] = a.value
        return FieldElement(self, tuple(raw))

    def _rzero(self):
        return (self.base._rzero(),) * self.degree

    def _ris_zero(self, a) -> bool:
        return all(self.base._ris_zero(c) for c in a)

    def _rfrom_int(self, n: int):
        raw = [self.base._rzero()] * self.degree
        raw[0] = self.base._rfrom_int(n)
        return tuple(raw)

    def _rfrom_index(self, n: int):
        q = self.base.order
        raw = []
        for _ in range(self.degree):
            raw.append(self.base._rfrom_index(n % q))
            n //= q
        return tuple(raw)

    def _radd(self, a, b):
        add = self.base._radd
        return tuple(add(x, y) for x, y in zip(a, b))

    def _rsub(self, a, b):
        sub = self.base._rsub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def _rneg(self, a):
        neg = self.base._rneg
        return tuple(neg(x) for x in a)

    def _rmul(self, a, b):
        base = self.base
        k = self.degree
        if isinstance(base, PrimeField):
            # raw-int kernel (Kronecker multiply) for towers of height one
            prod = zpoly.zp_mul(zpoly.zp_trim(list(a)), zpoly.zp_trim(list(b)), base.p)
            rem = zpoly.zp_rem(prod, list(self.modulus), base.p)
            return tuple(rem + [0] * (k - len(rem)))
        prod = [base._rzero()] * (2 * k - 1)
        for i, ai in enumerate(a):
            if base._ris_zero(ai):
                continue
            for j, bj in enumerate(b):
                if base._ris_zero(bj):
                    continue
                prod[i + j] = base._radd(prod[i + j], base._rmul(ai, bj))
        # reduce modulo the monic modulus
        for i in range(2 * k - 2, k - 1, -1):
            lead = prod[i]
            if base._ris_zero(lead):
                continue
            prod[i] = base._rzero()
            shift = i - k
            for j in range(k):
                prod[shift + j] = base._rsub(prod[shift + j], base._rmul(lead, self.modulus[j]))
        return tuple(prod[:k])

    def _rinv(self, a):
        if self._ris_zero(a):
            raise ZeroDivisionError("inverse of zero")
        base = self.base
        if isinstance(base, PrimeField):
            inv = zpoly.zp_inv_mod(zpoly.zp_trim(list(a)), list(self.modulus), base.p)
            return tuple(inv + [0] * (self.degree - len(inv)))
        inv = _rp_inv_mod(base, list(a), list(self.modulus))
        inv = inv + [base._rzero()] * (self.degree - len(inv))
        return tuple(inv[: self.degree])

    def _rrand(self, rng):
        return tuple(self.base._rrand(rng) for _ in range(self.degree))

    def coeff_str(self, a: FieldElement) -> str:
        parts = []
        for i in range(self.degree - 1, -1, -1):
            c = a.value[i]
            if self.base._ris_zero(c):
                continue
            cs = self.base.coeff_str(FieldElement(self.base, c))
            if i == 0:
                parts.append(cs)
            else:
                var = self.name if i == 1 else f"{self.name}^{i}"
                parts.append(var if cs == "1" else f"{cs}*{var}")
        if not parts:
            return "0"
        body = " + ".join(parts)
        needs_parens = len(parts) > 1 or self.name in body
        return f"({body})" if needs_parens else body

    def __repr__(self) -> str:
        return f"{self.base!r}[{self.name}]/(deg {self.degree})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("ExtensionField", self.base, self.modulus))


# --- raw polynomial helpers over a finite field (used for extension arithmetic) ---


def _rp_trim(field: FiniteField, cs: list) -> list:
    while cs and field._ris_zero(cs[-1]):
        cs.pop()
    return cs


def _rp_rem(field: FiniteField, a: list, b: list) -> list:
    """Remainder of a by b (b nonzero), raw coefficient lists, low degree first."""
    a = list(a)
    _rp_trim(field, a)
    lead_inv = field._rinv(b[-1])
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        factor = field._rmul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        for j in range(db + 1):
            a[shift + j] = field._rsub(a[shift + j], field._rmul(factor, b[j]))
        _rp_trim(field, a)
    return a


def _rp_mul(field: FiniteField, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [field._rzero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if field._ris_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = field._radd(out[i + j], field._rmul(ai, bj))
    return _rp_trim(field, out)


def _rp_inv_mod(field: FiniteField, a: list, m: list) -> list:
    """Inverse of a modulo m via the extended Euclidean algorithm."""
    r0, r1 = list(m), _rp_rem(field, a, m)
    t0, t1 = [], [field._rfrom_int(1)]
    while r1:
        lead_inv = field._rinv(r1[-1])
        d0, d1 = len(r0) - 1, len(r1) - 1
        if d0 < d1:
            r0, r1, t0, t1 = r1, r0, t1, t0
            continue
        # one division step: r0 -= q * r1 with q a monomial
        factor = field._rmul(r0[-1], lead_inv)
        shift = d0 - d1
        q = [field._rzero()] * shift + [factor]
        new_r = list(r0)
        for j in range(d1 + 1):
            new_r[shift + j] = field._rsub(new_r[shift + j], field._rmul(factor, r1[j]))
        _rp_trim(field, new_r)
        qt1 = _rp_mul(field, q, t1)
        new_t = [field._rzero()] * max(len(t0), len(qt1))
        for i, c in enumerate(t0):
            new_t[i] = c
        for i, c in enumerate(qt1):
            new_t[i] = field._rsub(new_t[i], c)
        _rp_trim(field, new_t)
        if len(new_r) - 1 < len(r1) - 1 or not new_r:
            r0, r1 = r1, new_r
            t0, t1 = t1, new_t
        else:
            r0, t0 = new_r, new_t
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo the modulus")
    scale = field._rinv(r0[0])
    return [field._rmul(scale, c) for c in t0]


def _rp_pow_mod(field: FiniteField, base: list, exponent: int, m: list) -> list:
    result = [field._rfrom_int(1)]
    acc = _rp_rem(field, base, m)
    while exponent:
        if exponent & 1:
            result = _rp_rem(field, _rp_mul(field, result, acc), m)
        exponent >>= 1
        if exponent:
            acc = _rp_rem(field, _rp_mul(field, acc, acc), m)
    return result


def _rp_gcd(field: FiniteField, a: list, b: list) -> list:
    a, b = list(a), list(b)
    _rp_trim(field, a)
    _rp_trim(field, b)
    while b:
        a, b = b, _rp_rem(field, a, b)
    if a:
        scale = field._rinv(a[-1])
        a = [field._rmul(scale, c) for c in a]
    return a


def _modulus_irreducible(field: FiniteField, mod) -> bool:
    """Rabin irreducibility test for a monic modulus over a finite field."""
    n = len(mod) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    q = field.order
    x = [field._rzero(), field._rfrom_int(1)]
    mod_list = list(mod)
    # x^(q^n) == x mod m
    probe = _rp_pow_mod(field, x, q**n, mod_list)
    minus_x = [field._rzero(), field._rneg(field._rfrom_int(1))]
    diff = [field._rzero()] * max(len(probe), 2)
    for i, c in enumerate(probe):
        diff[i] = c
    for i, c in enumerate(minus_x):
        diff[i] = field._radd(diff[i], c)
    if _rp_trim(field, diff):
        return False
    # gcd(x^(q^(n/l)) - x, m) == 1 for every prime divisor l of n
    for ell in sorted({f for f in _prime_factors(n)}):
        probe = _rp_pow_mod(field, x, q ** (n // ell), mod_list)
        diff = [field._rzero()] * max(len(probe), 2)
        for i, c in enumerate(probe):
            diff[i] = c
        diff[1] = field._rsub(diff[1], field._rfrom_int(1))
        _rp_trim(field, diff)
        g = _rp_gcd(field, diff, mod_list)
        if len(g) != 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def adjoin_sqrt(field: FiniteField, a: FieldElement, name: str = "s"):
    """Return ``(field2, root, lift)`` with ``root**2 == lift(a)`` in ``field2``.

    If ``a`` is already a square, ``field2`` is ``field`` itself and ``lift``
    is the identity.  Otherwise ``field2`` is the quadratic extension
    ``field[s]/(s^2 - a)``, which is a field exactly because ``a`` is a
    non-square.
    """
    root = field.sqrt(a)
    if root is not None:
        return field, root, lambda x: x
    modulus = (-a, field.zero(), field.one())
    bigger = ExtensionField(field, modulus, name=name, check=False)
    return bigger, bigger.generator(), bigger.from_base
