"""Exact coefficient fields: the rationals and prime fields.

Prime-field elements are plain ints in [0, p); rational elements are
`fractions.Fraction`.  Keeping elements unboxed lets the Groebner kernel
run its inner loops on native int arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

#: default working prime; large enough for genericity draws at desk scale
DEFAULT_PRIME = 32003
#: agreement/escalation primes for the multi-prime protocol
PROTOCOL_PRIMES = (32003, 65537, 30011)

#: prime fields below this size are rejected for genericity draws
GENERICITY_MIN_PRIME = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """GF(p) with elements represented as ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    # -- element constructors -------------------------------------------------
    def from_int(self, n: int) -> int:
        return n % self.p

    def from_fraction(self, q: Fraction) -> int:
        den = q.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes mod {self.p}")
        return q.numerator * pow(den, -1, self.p) % self.p

    def coerce(self, c) -> int:
        if isinstance(c, int):
            return c % self.p
        if isinstance(c, Fraction):
            return self.from_fraction(c)
        raise TypeError(f"cannot coerce {c!r} into GF({self.p})")

    # -- arithmetic -----------------------------------------------------------
    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    # -- misc -----------------------------------------------------------------
    def random_element(self, rng) -> int:
        return rng.randrange(self.p)

    def random_nonzero(self, rng) -> int:
        return rng.randrange(1, self.p)

    def is_large(self) -> bool:
        return self.p >= GENERICITY_MIN_PRIME

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """The rationals, elements are `fractions.Fraction`."""

    __slots__ = ()

    p = 0  # characteristic

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, q: Fraction) -> Fraction:
        return q

    def coerce(self, c) -> Fraction:
        if isinstance(c, (int, Fraction)):
            return Fraction(c)
        raise TypeError(f"cannot coerce {c!r} into QQ")

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def random_element(self, rng) -> Fraction:
        # bounded integer entries keep coordinate changes well conditioned
        return Fraction(rng.randint(-99, 99))

    def random_nonzero(self, rng) -> Fraction:
        n = rng.randint(1, 99)
        return Fraction(n if rng.random() < 0.5 else -n)

    def is_large(self) -> bool:
        return True

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
