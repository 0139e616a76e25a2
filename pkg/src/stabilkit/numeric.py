"""Exact scalars.

Every value leaving a solver is a :class:`HalfInt`; LP internals use
:class:`fractions.Fraction` (exported here as ``Rat``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Fraction

_Number = Union["HalfInt", int, Fraction]


@dataclass(frozen=True, order=True)
class HalfInt:
    """A multiple of 1/2, stored as the integer ``doubled = 2 * value``."""

    doubled: int

    def __post_init__(self) -> None:
        if not isinstance(self.doubled, int) or isinstance(self.doubled, bool):
            raise TypeError(f"HalfInt.doubled must be int, got {type(self.doubled).__name__}")

    @classmethod
    def of(cls, value: _Number) -> HalfInt:
        """Convert an int, Fraction or HalfInt; raise if not half-integral."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        frac = Fraction(value)
        twice = 2 * frac
        if twice.denominator != 1:
            raise ValueError(f"{frac} is not half-integral")
        return cls(twice.numerator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def is_integral(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other: HalfInt) -> HalfInt:
        if isinstance(other, int):
            other = HalfInt(2 * other)
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other: HalfInt) -> HalfInt:
        if isinstance(other, int):
            other = HalfInt(2 * other)
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled - other.doubled)

    def __rsub__(self, other: int) -> HalfInt:
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt(2 * other - self.doubled)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.doubled)

    def __mul__(self, k: int) -> HalfInt:
        if not isinstance(k, int):
            return NotImplemented
        return HalfInt(self.doubled * k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


def half_sum(values) -> HalfInt:
    return HalfInt(sum(v.doubled for v in values))
