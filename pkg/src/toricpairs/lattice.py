"""Exact integer primitives on the plane lattice Z^2.

The same vector type is used for ray generators (lattice N) and for
characters / polytope points (lattice M). All arithmetic is checked against
the signed 64-bit range so that a runaway recurrence is reported instead of
silently producing huge numbers that a fixed-width port would have wrapped.
"""
from __future__ import annotations

from math import gcd
from typing import NamedTuple

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class LatticeOverflowError(ArithmeticError):
    """An intermediate value left the signed 64-bit range."""

    def __init__(self, value: int, where: str = ""):
        self.value = value
        self.where = where
        msg = f"integer overflow ({value})"
        if where:
            msg += f" in {where}"
        super().__init__(msg)


class NotUnimodularError(ValueError):
    pass


def checked(value: int, where: str = "") -> int:
    if value < INT64_MIN or value > INT64_MAX:
        raise LatticeOverflowError(value, where)
    return value


class LatticeVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return LatticeVector(checked(self.x + other.x, "add"), checked(self.y + other.y, "add"))

    def __sub__(self, other):
        return LatticeVector(checked(self.x - other.x, "sub"), checked(self.y - other.y, "sub"))

    def __neg__(self):
        return LatticeVector(checked(-self.x, "neg"), checked(-self.y, "neg"))

    def __mul__(self, k):  # type: ignore[override]
        if not isinstance(k, int):
            return NotImplemented
        return LatticeVector(checked(k * self.x, "scale"), checked(k * self.y, "scale"))

    __rmul__ = __mul__

    def dot(self, other: "LatticeVector") -> int:
        """Pairing <m, u> between a character and a ray."""
        return checked(self.x * other.x + self.y * other.y, "dot")

    def __repr__(self):
        return f"({self.x},{self.y})"


def vec(p) -> LatticeVector:
    """Coerce a pair of integers into a LatticeVector."""
    if isinstance(p, LatticeVector):
        return p
    x, y = p
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise TypeError(f"lattice coordinates must be integers, got {p!r}")
    return LatticeVector(checked(x), checked(y))


def det2(u: LatticeVector, v: LatticeVector) -> int:
    return checked(u[0] * v[1] - u[1] * v[0], "det2")


def is_primitive(u: LatticeVector) -> bool:
    return gcd(u[0], u[1]) == 1


def segment_lattice_count(x: LatticeVector, y: LatticeVector) -> int:
    """Number of lattice points on the closed segment [x, y], minus one.

    A degenerate segment (x == y) gives 0.
    """
    return gcd(x[0] - y[0], x[1] - y[1])


def solve_unimodular_pair(u: LatticeVector, a: int, v: LatticeVector, b: int) -> LatticeVector:
    """Unique m in Z^2 with <m, u> = -a and <m, v> = -b, for det(u, v) = 1."""
    d = det2(u, v)
    if d != 1:
        raise NotUnimodularError(f"det({u!r}, {v!r}) = {d}, expected 1")
    return LatticeVector(
        checked(b * u[1] - a * v[1], "solve_unimodular_pair"),
        checked(-b * u[0] + a * v[0], "solve_unimodular_pair"),
    )
