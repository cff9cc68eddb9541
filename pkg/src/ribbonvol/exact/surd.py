"""Exact arithmetic in the real quadratic field Q(sqrt(D)).

Elements are `a + b*sqrt(D)` with rational `a`, `b` and a fixed square-free
positive integer `D` (the pentagon computations need D = 5).  Rationals embed
as `b = 0`; mixed arithmetic with `int` and `Fraction` promotes automatically.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Surd", "sqrt5"]


class Surd:
    """An element a + b*sqrt(D) of a real quadratic field."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b=0, D: int = 5):
        if D <= 0:
            raise ValueError("D must be a positive integer")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.D = D

    # -- helpers ---------------------------------------------------------

    @classmethod
    def _coerce(cls, x, D: int) -> "Surd":
        if isinstance(x, Surd):
            if x.b == 0:
                return cls(x.a, 0, D)
            if x.D != D:
                raise ValueError(f"cannot mix sqrt({x.D}) with sqrt({D})")
            return x
        if isinstance(x, (int, Rational)):
            return cls(x, 0, D)
        raise TypeError(f"cannot coerce {type(x).__name__} to Surd")

    def _pair(self, other):
        if isinstance(other, Surd) and self.b == 0 and other.b != 0:
            return Surd(self.a, 0, other.D), other
        return self, Surd._coerce(other, self.D)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        try:
            s, o = self._pair(other)
        except TypeError:
            return NotImplemented
        return Surd(s.a + o.a, s.b + o.b, s.D if s.b != 0 else o.D)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.D)

    def __sub__(self, other):
        try:
            s, o = self._pair(other)
        except TypeError:
            return NotImplemented
        return s + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            s, o = self._pair(other)
        except TypeError:
            return NotImplemented
        D = s.D if s.b != 0 else o.D
        return Surd(s.a * o.a + D * s.b * o.b, s.a * o.b + s.b * o.a, D)

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        norm = self.a * self.a - self.D * self.b * self.b
        if norm == 0:
            if self.a == 0 and self.b == 0:
                raise ZeroDivisionError("division by zero Surd")
            raise ZeroDivisionError(f"sqrt({self.D}) is rational?")
        return Surd(self.a / norm, -self.b / norm, self.D)

    def __truediv__(self, other):
        try:
            s, o = self._pair(other)
        except TypeError:
            return NotImplemented
        return s * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Surd(1, 0, self.D)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        if isinstance(other, Surd):
            s, o = self._pair(other)
            return s.a == o.a and s.b == o.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def _sign(self) -> int:
        """Exact sign of a + b*sqrt(D)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        # compare a with -b*sqrt(D); both sides squared with care for signs
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs = a * a
        rhs = self.D * b * b
        if a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def __lt__(self, other):
        s, o = self._pair(other)
        return (s - o)._sign() < 0

    def __le__(self, other):
        s, o = self._pair(other)
        return (s - o)._sign() <= 0

    def __gt__(self, other):
        s, o = self._pair(other)
        return (s - o)._sign() > 0

    def __ge__(self, other):
        s, o = self._pair(other)
        return (s - o)._sign() >= 0

    def __abs__(self):
        return -self if self._sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.D) ** 0.5

    # -- formatting ------------------------------------------------------

    def __repr__(self):
        return f"Surd({self.a!r}, {self.b!r}, D={self.D})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.D})"
        bpart = root if self.b == 1 else (f"-{root}" if self.b == -1 else f"{self.b}*{root}")
        if self.a == 0:
            return bpart
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        bmag = root if mag == 1 else f"{mag}*{root}"
        return f"{self.a} {sign} {bmag}"

    def to_json(self):
        if self.b == 0:
            return str(self.a)
        return {"a": str(self.a), "b": str(self.b), "D": self.D}

    @classmethod
    def from_json(cls, obj) -> "Surd":
        if isinstance(obj, str):
            return cls(Fraction(obj))
        return cls(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["D"]))


def sqrt5() -> Surd:
    return Surd(0, 1, 5)
