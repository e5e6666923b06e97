"""Exact coefficient fields: the rationals and prime fields.

Rational coefficients are `fractions.Fraction`; prime-field coefficients are
plain ints reduced to the canonical residue in [0, p). All arithmetic is exact.
"""

from fractions import Fraction

from .errors import NotInvertibleError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CoefField:
    """A coefficient field, identified by its characteristic (0 means Q)."""

    __slots__ = ("char",)

    def __init__(self, char=0):
        if char != 0 and not is_prime(char):
            raise ValueError(f"prime-field modulus must be prime, got {char}")
        self.char = char

    @property
    def is_rational(self):
        return self.char == 0

    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def coerce(self, x):
        """Canonicalize an int or Fraction into this field."""
        p = self.char
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise NotInvertibleError(f"denominator {x.denominator} not invertible mod {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return x % p

    def of_fraction(self, num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if self.char == 0:
            return Fraction(num, den)
        return self.mul(num % self.char, self.inv(den))

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def mul(self, a, b):
        return a * b % self.char if self.char else a * b

    def neg(self, a):
        return -a % self.char if self.char else -a

    def inv(self, a):
        p = self.char
        if p == 0:
            if a == 0:
                raise NotInvertibleError("division by zero")
            return 1 / Fraction(a)
        a %= p
        if a == 0:
            raise NotInvertibleError(f"{a} not invertible mod {p}")
        return pow(a, -1, p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, c):
        return str(c)

    def __eq__(self, other):
        return isinstance(other, CoefField) and self.char == other.char

    def __hash__(self):
        return hash(("CoefField", self.char))

    def __repr__(self):
        return "Q" if self.char == 0 else f"F{self.char}"


QQ = CoefField(0)


def prime_field(p):
    return CoefField(p)
