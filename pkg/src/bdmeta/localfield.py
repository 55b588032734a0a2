"""Finite model of F^x / F^xn for a tame p-adic field with residue field of size q.

A class is stored as (val, unit_exp): the element pi^val * u where the residue
of the unit u is g^unit_exp for a fixed generator g of the residue field's
multiplicative group. Principal units are n-divisible in the tame case and
are dropped.

Roots of unity are written additively as exponents: an element of mu_k is an
integer e mod k standing for zeta_k^e.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional


def lcm(a, b):
    return a * b // gcd(a, b)


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _prime_power_base(q):
    for p in range(2, q + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return None


def primitive_root(p):
    """Smallest primitive root modulo the prime p."""
    if not _is_prime(p):
        raise ValueError("primitive_root needs a prime")
    phi = p - 1
    factors = [d for d in range(2, phi + 1) if phi % d == 0 and _is_prime(d)]
    for g in range(2, p):
        if all(pow(g, phi // f, p) != 1 for f in factors):
            return g
    return 1  # p == 2


@dataclass(frozen=True)
class FieldClass:
    val: int
    unit_exp: int
    qm1: int

    def __post_init__(self):
        object.__setattr__(self, "unit_exp", self.unit_exp % self.qm1)

    def __mul__(self, other):
        return FieldClass(self.val + other.val, self.unit_exp + other.unit_exp, self.qm1)

    def inv(self):
        return FieldClass(-self.val, -self.unit_exp, self.qm1)

    def __pow__(self, k):
        return FieldClass(self.val * k, self.unit_exp * k, self.qm1)

    def is_unit(self):
        return self.val == 0

    def reduced(self, n):
        """Representative of the class mod n-th powers (parity survives for even n)."""
        return FieldClass(self.val % n, self.unit_exp % n, self.qm1)

    def same_class(self, other, n):
        return (self.val - other.val) % n == 0 and (self.unit_exp - other.unit_exp) % n == 0

    def literal(self):
        return ["pi", self.val, self.unit_exp]


class TameFieldModel:
    """Tame local field model with residue field size q and degree n | q-1.

    ``weil_pi`` is the exponent (mod m) of chi_psi(pi). By default it is 0 when
    q = 1 mod 4 and m/4 (i.e. the value i) when q = 3 mod 4. Any choice with
    2*weil_pi = (q-1)/2 * m/2 mod m satisfies the defining relation.
    """

    def __init__(self, q: int, n: int, weil_pi: Optional[int] = None):
        q, n = int(q), int(n)
        if q % 2 == 0 or _prime_power_base(q) is None:
            raise ValueError("q must be an odd prime power")
        if n < 1 or (q - 1) % n:
            raise ValueError("n must divide q-1")
        self.q = q
        self.n = n
        self.m = lcm(n, 4)
        self.p = _prime_power_base(q)
        self.g = primitive_root(q) if _is_prime(q) else None
        eps = ((q - 1) // 2) % 2
        if weil_pi is None:
            weil_pi = 0 if q % 4 == 1 else self.m // 4
        if (2 * weil_pi - eps * (self.m // 2)) % self.m:
            raise ValueError("chi_psi(pi)^2 must equal (pi,pi)_2")
        self.weil_pi = weil_pi % self.m

    def __repr__(self):
        return f"TameFieldModel(q={self.q}, n={self.n})"

    def __eq__(self, other):
        return isinstance(other, TameFieldModel) and (self.q, self.n, self.weil_pi) == (other.q, other.n, other.weil_pi)

    def __hash__(self):
        return hash((self.q, self.n, self.weil_pi))

    # -- elements
    def cls(self, val, unit_exp=0) -> FieldClass:
        return FieldClass(int(val), int(unit_exp), self.q - 1)

    def one(self):
        return self.cls(0, 0)

    def pi(self):
        return self.cls(1, 0)

    def unit_gen(self):
        return self.cls(0, 1)

    def neg_one(self):
        return self.cls(0, (self.q - 1) // 2)

    def generators(self):
        """The two generators of F^x / F^xn: pi and the unit generator."""
        return (self.pi(), self.unit_gen())

    def classes(self, k=None):
        """Representatives of F^x / F^xk (default k = n)."""
        k = self.n if k is None else k
        return [self.cls(v, e) for v in range(k) for e in range(k)]

    # -- symbols
    def _tame_exp(self, a: FieldClass, b: FieldClass) -> int:
        """Exponent E mod q-1 with tame symbol of (a, b) = g^E in the residue field."""
        half = (self.q - 1) // 2
        return (a.val * b.val * half + b.val * a.unit_exp - a.val * b.unit_exp) % (self.q - 1)

    def hilbert(self, a: FieldClass, b: FieldClass) -> int:
        """n-th Hilbert symbol (a, b)_n as an exponent mod n of zeta_n = g^((q-1)/n)."""
        return self._tame_exp(a, b) % self.n

    def hilbert2(self, a: FieldClass, b: FieldClass) -> int:
        """Quadratic Hilbert symbol as an exponent mod 2."""
        return self._tame_exp(a, b) % 2

    def hilbert_in_m(self, a, b) -> int:
        return self.hilbert(a, b) * (self.m // self.n) % self.m

    def weil_chi(self, a: FieldClass) -> int:
        """chi_psi(a) as an exponent mod m (unit values 1, see class docstring)."""
        v = a.val
        eps = ((self.q - 1) // 2) % 2
        h = self.hilbert2(self.cls(v, 0), self.cls(0, a.unit_exp))
        e2 = (eps * (v * (v - 1) // 2) + h) % 2
        return (v * self.weil_pi + e2 * (self.m // 2)) % self.m

    def mu_m_label(self, e):
        return f"zeta_{self.m}^{e % self.m}"


def tame_symbol_oracle(q: int, n: int, a: FieldClass, b: FieldClass) -> int:
    """Literal residue computation of the tame symbol, raised to (q-1)/n.

    Needs q prime. Returns the exponent of zeta_n = g^((q-1)/n).
    """
    if not _is_prime(q):
        raise ValueError("oracle implemented for prime q only")
    g = primitive_root(q)
    ua = pow(g, a.unit_exp, q)
    ub = pow(g, b.unit_exp, q)
    sign = q - 1 if (a.val * b.val) % 2 else 1
    num = pow(ua, b.val, q) if b.val >= 0 else pow(pow(ua, -1, q), -b.val, q)
    den = pow(ub, a.val, q) if a.val >= 0 else pow(pow(ub, -1, q), -a.val, q)
    r = sign * num * pow(den, -1, q) % q
    r = pow(r, (q - 1) // n, q)
    zeta = pow(g, (q - 1) // n, q)
    x = 1
    for e in range(n):
        if x == r:
            return e
        x = x * zeta % q
    raise AssertionError("value is not an n-th root of unity")
