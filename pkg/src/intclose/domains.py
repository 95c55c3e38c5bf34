"""Exact coefficient domains: big integers, rationals, and prime fields Z_q.

Values are plain Python objects (``int`` for INT/MODP, ``Fraction`` for RAT);
a :class:`Domain` carries the arithmetic.  MODP residues are kept in
``[0, q)`` and all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

INT = "INT"
RAT = "RAT"
MODP = "MODP"

_MAX_WORD = 1 << 63


class DomainError(ArithmeticError):
    """An operation is undefined in the coefficient domain."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for word-sized integers."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
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


@dataclass(frozen=True)
class Domain:
    """Tagged coefficient domain: INT, RAT, or MODP(q) for a word-sized prime q."""

    kind: str
    char: int = 0

    def __post_init__(self):
        if self.kind not in (INT, RAT, MODP):
            raise DomainError(f"unknown domain kind {self.kind!r}")
        if self.kind == MODP:
            if not (2 <= self.char < _MAX_WORD):
                raise DomainError(f"modulus {self.char} out of word range")
            if not is_prime(self.char):
                raise DomainError(f"modulus {self.char} is not prime")
        elif self.char != 0:
            raise DomainError(f"{self.kind} domain has characteristic 0")

    def __repr__(self):
        return f"GF({self.char})" if self.kind == MODP else self.kind.lower()

    @property
    def zero(self):
        return Fraction(0) if self.kind == RAT else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RAT else 1

    def convert(self, value):
        """Coerce an int or Fraction into a canonical domain value."""
        if self.kind == INT:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise DomainError(f"{value} is not an integer")
                return value.numerator
            return int(value)
        if self.kind == RAT:
            return Fraction(value)
        q = self.char
        if isinstance(value, Fraction):
            if value.denominator % q == 0:
                raise DomainError(f"denominator of {value} vanishes mod {q}")
            return value.numerator * pow(value.denominator, -1, q) % q
        return int(value) % q

    def add(self, a, b):
        return (a + b) % self.char if self.kind == MODP else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.kind == MODP else a - b

    def mul(self, a, b):
        return (a * b) % self.char if self.kind == MODP else a * b

    def neg(self, a):
        return (-a) % self.char if self.kind == MODP else -a

    def div(self, a, b):
        """Exact division; raises DomainError when undefined (e.g. by zero)."""
        if self.is_zero(b):
            raise DomainError("division by zero")
        if self.kind == MODP:
            return a * pow(b, -1, self.char) % self.char
        if self.kind == RAT:
            return a / b
        if a % b != 0:
            raise DomainError(f"{a} not divisible by {b} over the integers")
        return a // b

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == 1


ZZ = Domain(INT)
QQ = Domain(RAT)


def GF(q: int) -> Domain:
    """The prime field with q elements."""
    return Domain(MODP, q)


def balanced(c: int, n: int) -> int:
    """Representative of c mod n with least absolute value, ties to +n/2."""
    c %= n
    return c if 2 * c <= n else c - n
