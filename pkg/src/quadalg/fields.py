"""Exact scalar arithmetic over Q and GF(p).

Scalars are plain Python values: ``fractions.Fraction`` over the rationals,
``int`` residues in ``0..p-1`` over a prime field.  A field object carries
the arithmetic; values never float.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldMismatchError(ValueError):
    """Raised when operands over different ground fields are combined."""


class Rationals:
    """The field Q; scalars are Fractions in lowest terms."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x) -> Fraction:
        return x if type(x) is Fraction else Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """GF(p) for a prime p; scalars are ints reduced mod p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x) -> int:
        if type(x) is int:
            return x if 0 <= x < self.p else x % self.p
        if isinstance(x, Fraction):
            num = x.numerator % self.p
            den = x.denominator % self.p
            return (num * self.inv(den)) % self.p if den != 1 else num
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


def check_same_field(f1, f2):
    if f1 != f2:
        raise FieldMismatchError(f"field mismatch: {f1} vs {f2}")
