"""Torus-invariant divisors and intersection theory on a smooth toric surface."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .fan import CompleteSmoothFan
from .lattice import LatticeVector, checked, solve_unimodular_pair, vec


class DivisorError(ValueError):
    pass


@dataclass(frozen=True)
class InvariantDivisor:
    """L = sum_i a_i D_i over the rays of ``fan``."""

    fan: CompleteSmoothFan
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.fan.n:
            raise DivisorError(f"{len(coeffs)} coefficients for a fan with {self.fan.n} rays")
        for a in coeffs:
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"divisor coefficients must be integers, got {a!r}")
            checked(a)
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other: "InvariantDivisor") -> "InvariantDivisor":
        _same_fan(self, other)
        return InvariantDivisor(self.fan, tuple(checked(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "InvariantDivisor") -> "InvariantDivisor":
        _same_fan(self, other)
        return InvariantDivisor(self.fan, tuple(checked(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return InvariantDivisor(self.fan, tuple(-a for a in self.coeffs))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i % len(self.coeffs)]


def _same_fan(a: InvariantDivisor, b: InvariantDivisor):
    if a.fan.rays != b.fan.rays:
        raise DivisorError("divisors live on different fans")


@dataclass(frozen=True)
class SupportSet:
    """Reduced boundary divisor D = sum_{i in indices} D_i."""

    fan: CompleteSmoothFan
    indices: frozenset[int]

    def __post_init__(self):
        idx = frozenset(self.indices)
        bad = [i for i in idx if not 0 <= i < self.fan.n]
        if bad:
            raise DivisorError(f"indices {sorted(bad)} outside 0..{self.fan.n - 1}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def from_mask(cls, fan: CompleteSmoothFan, mask: int) -> "SupportSet":
        return cls(fan, frozenset(i for i in range(fan.n) if mask >> i & 1))

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.indices)

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(self.fan.n)) - self.indices

    def sorted(self) -> list[int]:
        return sorted(self.indices)

    def __len__(self):
        return len(self.indices)


def divisor(fan: CompleteSmoothFan, coeffs: Iterable[int]) -> InvariantDivisor:
    return InvariantDivisor(fan, tuple(coeffs))


def canonical_divisor(fan: CompleteSmoothFan) -> InvariantDivisor:
    return InvariantDivisor(fan, (-1,) * fan.n)


def intersect_curve(L: InvariantDivisor, i: int) -> int:
    """Kleiman number L . D_i = a_{i-1} + a_{i+1} - gamma_i a_i."""
    n = L.fan.n
    i %= n
    g = L.fan.gammas[i]
    return checked(L[i - 1] + L[i + 1] - g * L[i], "intersect_curve")


def kleiman_vector(L: InvariantDivisor) -> tuple[int, ...]:
    return tuple(intersect_curve(L, i) for i in range(L.fan.n))


def intersection_matrix(fan: CompleteSmoothFan) -> list[list[int]]:
    """Intersection form on the boundary curves D_0 .. D_{n-1}.

    Adjacency is modular, so for n = 3 every off-diagonal entry is 1.
    """
    n = fan.n
    g = fan.gammas
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = -g[i]
        m[i][(i + 1) % n] = 1
        m[i][(i - 1) % n] = 1
    return m


@dataclass(frozen=True)
class AmplenessVerdict:
    ample: bool
    kleiman: tuple[int, ...]
    witness: Optional[int]

    def __bool__(self):
        return self.ample


def is_ample(L: InvariantDivisor) -> AmplenessVerdict:
    """Toric Kleiman criterion: ample iff L . D_i > 0 for every boundary curve.

    The verdict carries the whole Kleiman vector; when not ample, ``witness``
    is the first index with a non-positive entry.
    """
    k = kleiman_vector(L)
    witness = next((i for i, v in enumerate(k) if v <= 0), None)
    return AmplenessVerdict(witness is None, k, witness)


def principal_divisor(fan: CompleteSmoothFan, m) -> InvariantDivisor:
    """div(chi^m) = sum_i <m, u_i> D_i."""
    m = vec(m)
    return InvariantDivisor(fan, tuple(m.dot(u) for u in fan.rays))


def linear_equivalence_witness(L1: InvariantDivisor, L2: InvariantDivisor) -> Optional[LatticeVector]:
    """A character m with L1 - L2 = div(chi^m), or None if there is none.

    The adjacent rays u_0, u_1 form a lattice basis, so m is forced by the
    first two coordinates; the remaining ones are then checked.
    """
    diff = L1 - L2
    fan = diff.fan
    m = solve_unimodular_pair(fan.rays[0], -diff[0], fan.rays[1], -diff[1])
    if principal_divisor(fan, m).coeffs == diff.coeffs:
        return m
    return None


def linearly_equivalent(L1: InvariantDivisor, L2: InvariantDivisor) -> bool:
    return linear_equivalence_witness(L1, L2) is not None


def log_anticanonical(fan: CompleteSmoothFan, delta) -> InvariantDivisor:
    """-(K_X + D) for the reduced divisor D supported on ``delta``.

    Coefficient 1 off the support, 0 on it.
    """
    if not isinstance(delta, SupportSet):
        delta = SupportSet(fan, frozenset(delta))
    return InvariantDivisor(fan, tuple(0 if i in delta.indices else 1 for i in range(fan.n)))


def divisor_to_document(L: InvariantDivisor) -> dict:
    return {"coeffs": list(L.coeffs)}


def divisor_from_document(fan: CompleteSmoothFan, doc) -> InvariantDivisor:
    return InvariantDivisor(fan, tuple(doc["coeffs"]))


def support_to_document(delta: SupportSet) -> dict:
    return {"delta": delta.sorted()}


def support_from_document(fan: CompleteSmoothFan, doc) -> SupportSet:
    return SupportSet(fan, frozenset(doc["delta"]))
