"""Small finite fields GF(p^f) in a polynomial basis.

An element is an integer ``0 <= a < p^f`` whose base-``p`` digits are the
coefficients of a polynomial of degree ``< f`` (least significant digit is
the constant term).  Multiplication is reduction modulo a fixed monic
irreducible polynomial.
"""
from __future__ import annotations

import itertools
from math import gcd

# Monic irreducible polynomials over GF(3), coefficient lists low degree first.
# These are the Conway polynomials for p = 3.
GF3_POLYNOMIALS = {
    1: (1, 1),                    # x + 1
    2: (2, 2, 1),                 # x^2 + 2x + 2
    3: (1, 2, 0, 1),              # x^3 + 2x + 1
    4: (2, 0, 0, 2, 1),           # x^4 + 2x^3 + 2
    5: (1, 2, 0, 0, 0, 1),        # x^5 + 2x + 1
    6: (2, 2, 1, 0, 2, 0, 1),     # x^6 + 2x^4 + x^2 + 2x + 2
    7: (1, 0, 2, 0, 0, 0, 0, 1),  # x^7 + 2x^2 + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, f)`` with ``q = p^f``, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            f = 0
            while q % p == 0:
                q //= p
                f += 1
            return (p, f) if q == 1 else None
    return None


def _polymulmod(a, b, modulus, p):
    f = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k]
        if c:
            for j in range(f + 1):
                prod[k - f + j] = (prod[k - f + j] - c * modulus[j]) % p
    return (prod + [0] * f)[:f]


def _digits(a: int, p: int, f: int) -> list[int]:
    return [(a // p**i) % p for i in range(f)]


def _primitive_powers(p: int, f: int, poly) -> tuple[int, list[int]] | None:
    """Smallest element of multiplicative order ``p^f - 1`` and its powers.

    Returns None when the quotient ring is not a field.
    """
    q = p ** f
    one = _digits(1, p, f)
    for g in range(1, q):
        gd = _digits(g, p, f)
        cur = one
        exp = [1]
        for _ in range(q - 2):
            cur = _polymulmod(cur, gd, poly, p)
            exp.append(sum(c * p**i for i, c in enumerate(cur)))
        if len(set(exp)) == q - 1 and 0 not in exp:
            return g, exp
    return None


def find_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Fixed table for p = 3, else the lexicographically first monic irreducible."""
    if p == 3 and f in GF3_POLYNOMIALS:
        return GF3_POLYNOMIALS[f]
    if f == 1:
        return (0, 1)
    for coeffs in itertools.product(range(p), repeat=f):
        poly = tuple(coeffs) + (1,)
        if poly[0] and _primitive_powers(p, f, poly) is not None:
            return poly
    raise ValueError(f"no irreducible polynomial of degree {f} over GF({p})")


class GF:
    """The field with ``q = p^f`` elements, with log/exp tables."""

    def __init__(self, q: int, modulus: tuple[int, ...] | None = None):
        pf = prime_power(q)
        if pf is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.f = pf
        self.modulus = tuple(modulus) if modulus is not None else find_irreducible(self.p, self.f)
        if len(self.modulus) != self.f + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        self._build_tables()

    def _digits(self, a: int) -> list[int]:
        return _digits(a, self.p, self.f)

    def _from_digits(self, d) -> int:
        return sum(c * self.p**i for i, c in enumerate(d))

    def _build_tables(self) -> None:
        found = _primitive_powers(self.p, self.f, self.modulus)
        if found is None:
            raise ValueError("modulus is not irreducible")
        self.primitive, exp = found
        self._exp = exp
        self._log = {a: i for i, a in enumerate(exp)}

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.f == 1:
            return (-a) % self.p
        return self._from_digits([(-x) % self.p for x in self._digits(a)])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n > 0 else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    @property
    def elements(self) -> range:
        return range(self.q)

    def multiplicative_order(self, a: int) -> int:
        return (self.q - 1) // gcd(self._log[a], self.q - 1)
