"""Exact scalar arithmetic over Q and over prime fields F_p.

Scalars are plain Python objects: ``Fraction`` over the rationals and
canonical residues (ints in ``[0, p)``) over F_p.  A ``Field`` instance
carries the characteristic and supplies the operations, so every other
module stays agnostic of which field it is working over.
"""

from fractions import Fraction


def _is_prime(n):
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


class Field:
    """Rationals (``p == 0``) or the prime field F_p (``p`` prime)."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or prime, got {p}")
        self.p = p

    @classmethod
    def rationals(cls):
        return cls(0)

    @classmethod
    def prime(cls, p):
        if p < 2:
            raise ValueError("prime field needs p >= 2")
        return cls(p)

    @classmethod
    def parse(cls, text):
        """Parse the CLI field syntax: ``q`` or ``fp:P``."""
        text = text.strip().lower()
        if text == "q":
            return cls(0)
        if text.startswith("fp:"):
            return cls.prime(int(text[3:]))
        raise ValueError(f"unknown field spec {text!r}; expected 'q' or 'fp:P'")

    # -- construction ------------------------------------------------------

    def of(self, num, den=1):
        """Lift an integer (or num/den pair, or Fraction) into the field."""
        if isinstance(num, Fraction):
            num, den = num.numerator, num.denominator * den
        if self.p == 0:
            return Fraction(num, den)
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} not invertible mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p == 0 else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p == 0 else f"F{self.p}"


QQ = Field(0)


def check_same_field(a, b):
    from .errors import FieldMismatch

    if a != b:
        raise FieldMismatch(f"{a!r} vs {b!r}")
