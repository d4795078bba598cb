"""Exact scalar fields: the rationals and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Elements of F_p are
:class:`Fp` instances, which interoperate with Python ints so that numpy
object arrays can hold them and ``@`` works unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, total_ordering
from numbers import Rational


@total_ordering
class Fp:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = int(value) % p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(o, self.p) / self

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else self.value == o

    def __lt__(self, other):
        # only for deterministic sorting
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else self.value < o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Field:
    """A scalar field; ``p=None`` means the rationals."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1))):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, x):
        if self.p is None:
            if type(x) is Fraction:
                return x
            if isinstance(x, Fp):
                raise ValueError("cannot coerce an F_p element into the rationals")
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{x.p}")
            return x
        if isinstance(x, Rational):
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        return Fp(int(x), self.p)

    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    @property
    def tag(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    @classmethod
    def from_tag(cls, tag: str) -> "Field":
        if tag == "q":
            return cls()
        if tag.startswith("fp:"):
            return cls(int(tag[3:]))
        raise ValueError(f"unknown field tag {tag!r} (expected 'q' or 'fp:<prime>')")


QQ = Field()
