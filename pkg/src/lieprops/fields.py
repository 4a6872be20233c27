"""Ground fields: the prime fields GF(p) and the rationals Q.

Elements are plain Python values: ints in ``range(p)`` for GF(p) and
``fractions.Fraction`` for Q.  Nothing is ever rounded.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldMismatch, InvalidField


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


_FIELD_RE = re.compile(r"^\s*(?:GF\(\s*(\d+)\s*\)|Q)\s*$")


class Field:
    """GF(p) when ``p`` is a prime, Q when ``p`` is None."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
                raise InvalidField(f"GF(p) needs a prime p, got {p!r}")
        self.p = p

    @classmethod
    def GF(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def Q(cls) -> "Field":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "Field":
        m = _FIELD_RE.match(text)
        if not m:
            raise InvalidField(f"cannot parse field {text!r}; expected 'Q' or 'GF(p)'")
        return cls(int(m.group(1))) if m.group(1) else cls(None)

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    @property
    def order(self):
        return self.p

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction or numeric string) into this field."""
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except ValueError:
                raise FieldMismatch(f"not a scalar: {x!r}") from None
        if isinstance(x, bool):
            x = int(x)
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise FieldMismatch(f"fraction {x} is not an element of GF({self.p})")
                x = x.numerator
            if not isinstance(x, int):
                raise FieldMismatch(f"{x!r} is not an element of GF({self.p})")
            return x % self.p
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise FieldMismatch(f"{x!r} is not a rational number")

    def check(self, x) -> bool:
        """True if ``x`` is already a canonical element of this field."""
        if self.p:
            return type(x) is int and 0 <= x < self.p
        return isinstance(x, Fraction)

    def vec(self, xs) -> tuple:
        return tuple(self(x) for x in xs)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, self.p - 2, self.p)
        return 1 / Fraction(a)

    def norm(self, a):
        return a % self.p if self.p else a

    def elements(self):
        if not self.p:
            raise InvalidField("Q has no finite element list")
        return range(self.p)

    def fmt(self, a) -> str:
        if self.p:
            return str(a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def sort_key(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "Q"

    __str__ = __repr__

    def __reduce__(self):
        return (Field, (self.p,))


Q = Field(None)


def GF(p: int) -> Field:
    return Field(p)
