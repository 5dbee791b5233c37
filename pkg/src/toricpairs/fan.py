"""Complete smooth fans in the plane.

A fan is stored as its cyclic, counterclockwise sequence of primitive ray
generators ``u_0, ..., u_{n-1}`` with ``det(u_i, u_{i+1}) = 1`` (indices mod
n). Up to a lattice automorphism a fan is determined by its self-intersection
data ``gamma_i = det(u_{i-1}, u_{i+1})``, which satisfies

    u_{i-1} - gamma_i * u_i + u_{i+1} = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .lattice import (
    INT64_MAX,
    LatticeOverflowError,
    LatticeVector,
    checked,
    det2,
    is_primitive,
    vec,
)

GammaSequence = tuple[int, ...]

SEED_U0 = LatticeVector(1, 0)
SEED_U1 = LatticeVector(0, 1)


class FanError(ValueError):
    """Base class for rejected ray sequences."""


class TooFewRaysError(FanError):
    pass


class NonPrimitiveRayError(FanError):
    def __init__(self, index: int, ray: LatticeVector):
        self.index = index
        super().__init__(f"ray {index} not primitive: {ray!r}")


class NonUnitDeterminantError(FanError):
    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"det(u_{index}, u_{index + 1}) = {value}, expected 1")


class WindingError(FanError):
    def __init__(self, winding: int):
        self.winding = winding
        super().__init__(f"winding number {winding}, expected 1")


class DuplicateRayError(FanError):
    pass


class ClosureError(FanError):
    pass


class BlowdownError(FanError):
    pass


def in_upper(u: Sequence[int]) -> bool:
    """Half-open upper half plane: angles in [0, pi)."""
    return u[1] > 0 or (u[1] == 0 and u[0] > 0)


def winding_number(rays: Sequence[Sequence[int]]) -> int:
    """Winding of a cyclic ray sequence whose angular steps all lie in (0, pi).

    Every full counterclockwise turn crosses the positive x axis exactly once,
    which shows up as a step from outside to inside the upper half plane.
    """
    n = len(rays)
    return sum(
        1 for i in range(n) if not in_upper(rays[i]) and in_upper(rays[(i + 1) % n])
    )


@dataclass(frozen=True)
class CompleteSmoothFan:
    rays: tuple[LatticeVector, ...]

    def __post_init__(self):
        rays = tuple(vec(r) for r in self.rays)
        object.__setattr__(self, "rays", rays)
        n = len(rays)
        if n < 3:
            raise TooFewRaysError(f"a complete fan needs at least 3 rays, got {n}")
        for i, u in enumerate(rays):
            if not is_primitive(u):
                raise NonPrimitiveRayError(i, u)
        for i in range(n):
            d = det2(rays[i], rays[(i + 1) % n])
            if d != 1:
                raise NonUnitDeterminantError(i, d)
        w = winding_number(rays)
        if w != 1:
            raise WindingError(w)
        if len(set(rays)) != n:
            raise DuplicateRayError("rays are not pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.rays)

    def ray(self, i: int) -> LatticeVector:
        return self.rays[i % self.n]

    @cached_property
    def gammas(self) -> GammaSequence:
        return gamma_sequence(self)

    def __len__(self):
        return self.n


def validate(rays: Iterable) -> CompleteSmoothFan:
    """Check a counterclockwise ray sequence and return it as a fan.

    Raises the FanError subclass naming the first violated condition.
    """
    return CompleteSmoothFan(tuple(vec(r) for r in rays))


def validate_any_orientation(rays: Iterable) -> CompleteSmoothFan:
    """Like validate, but a clockwise input is reversed first."""
    rays = [vec(r) for r in rays]
    if len(rays) >= 2 and det2(rays[0], rays[1]) == -1:
        rays.reverse()
    return validate(rays)


def gamma_sequence(fan: CompleteSmoothFan) -> GammaSequence:
    r = fan.rays
    n = len(r)
    return tuple(det2(r[i - 1], r[(i + 1) % n]) for i in range(n))


def picard_rank(fan: CompleteSmoothFan) -> int:
    return fan.n - 2


def _unfold(gammas: Sequence[int]) -> list[LatticeVector]:
    """Rays u_0 .. u_n generated from the seed basis by the gamma recurrence."""
    rays = [SEED_U0, SEED_U1]
    for i in range(1, len(gammas)):
        rays.append(gammas[i] * rays[i] - rays[i - 1])
    return rays


def from_gamma_sequence(gammas: Sequence[int]) -> CompleteSmoothFan:
    """Rebuild a fan from its gamma sequence, seeded at u_0 = e_1, u_1 = e_2."""
    gammas = tuple(gammas)
    n = len(gammas)
    if n < 3:
        raise TooFewRaysError(f"need at least 3 gammas, got {n}")
    rays = _unfold(gammas)
    if rays[n] != rays[0]:
        raise ClosureError(f"recurrence ends at {rays[n]!r}, not at u_0 = {rays[0]!r}")
    if gammas[0] * rays[0] - rays[n - 1] != rays[1]:
        raise ClosureError("gamma_0 relation fails at u_0")
    return validate(rays[:n])


def blowup(fan: CompleteSmoothFan, i: int) -> CompleteSmoothFan:
    """Insert u_i + u_{i+1} between positions i and i+1 (it becomes index i+1)."""
    n = fan.n
    if not 0 <= i < n:
        raise IndexError(f"cone index {i} out of range for {n} rays")
    rays = list(fan.rays)
    rays.insert(i + 1, rays[i] + rays[(i + 1) % n])
    return validate(rays)


def blowdown(fan: CompleteSmoothFan, i: int) -> CompleteSmoothFan:
    """Remove ray i, which must have gamma_i = 1."""
    n = fan.n
    if not 0 <= i < n:
        raise IndexError(f"ray index {i} out of range for {n} rays")
    if n <= 3:
        raise BlowdownError("cannot blow down a 3-ray fan")
    g = fan.gammas[i]
    if g != 1:
        raise BlowdownError(f"gamma_{i} = {g}; only gamma = 1 rays can be removed")
    rays = list(fan.rays)
    del rays[i]
    return validate(rays)


def canonical_key_of(gammas: Sequence[int]) -> GammaSequence:
    """Lexicographic minimum over rotations and reversed rotations."""
    g = tuple(gammas)
    r = g[::-1]
    n = len(g)
    return min(min(s[k:] + s[:k] for k in range(n)) for s in (g, r))


def canonical_key(fan: CompleteSmoothFan) -> GammaSequence:
    return canonical_key_of(fan.gammas)


def enumerate_fans(n: int, gamma_bound: int) -> list[GammaSequence]:
    """Canonical keys of all n-ray complete smooth fans with max |gamma_i| <= gamma_bound.

    Depth-first search over gamma_1 .. gamma_{n-2} from the seed basis. A branch
    dies once a ray re-enters the upper half plane after leaving it (it would
    pass u_0 before closing) or once coordinates leave the int64 range. The
    last ray must satisfy det(u_{n-1}, u_0) = 1, which fixes gamma_{n-1} and
    gamma_0. The family is infinite for n >= 4, so the bound is a truncation.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if gamma_bound < 0:
        raise ValueError("gamma_bound must be non-negative")
    b = gamma_bound
    choices = range(-b, b + 1)
    keys: set[GammaSequence] = set()
    gam = [0] * n
    u0x, u0y = SEED_U0
    u1x, u1y = SEED_U1

    def close(px, py, cx, cy):
        # cur = u_{n-1}, prev = u_{n-2}
        if cy != -1:
            return
        g_last = -py  # det(u_{n-2}, u_0)
        g_first = cx * u1y - cy * u1x  # det(u_{n-1}, u_1)
        if abs(g_last) > b or abs(g_first) > b:
            return
        gam[n - 1] = g_last
        gam[0] = g_first
        keys.add(canonical_key_of(gam))

    def dfs(depth, px, py, cx, cy, left_upper):
        # cur = u_depth; choose gamma_depth to produce u_{depth+1}
        if depth == n - 1:
            close(px, py, cx, cy)
            return
        for g in choices:
            nx = g * cx - px
            ny = g * cy - py
            if abs(nx) > INT64_MAX or abs(ny) > INT64_MAX:
                continue
            up = ny > 0 or (ny == 0 and nx > 0)
            if left_upper and up:
                continue
            gam[depth] = g
            dfs(depth + 1, cx, cy, nx, ny, left_upper or not up)

    dfs(1, u0x, u0y, u1x, u1y, False)
    return sorted(keys)


# Standard surfaces, ray order as used throughout the package.

def projective_plane() -> CompleteSmoothFan:
    return validate([(-1, -1), (1, 0), (0, 1)])


def hirzebruch(r: int) -> CompleteSmoothFan:
    """F_r with u_0 = -e_2, u_1 = e_1, u_2 = e_2, u_3 = -e_1 + r e_2."""
    if r < 0:
        raise ValueError("r must be a natural number")
    return validate([(0, -1), (1, 0), (0, 1), (-1, checked(r))])


def fan_from_document(doc) -> CompleteSmoothFan:
    """Parse ``{"rays": [[x, y], ...]}``; structural problems raise TypeError/KeyError."""
    if not isinstance(doc, dict) or "rays" not in doc:
        raise KeyError("fan document needs a 'rays' list")
    rays = doc["rays"]
    if not isinstance(rays, list) or not all(isinstance(r, list) and len(r) == 2 for r in rays):
        raise TypeError("'rays' must be a list of [x, y] pairs")
    return validate(rays)


def fan_to_document(fan: CompleteSmoothFan) -> dict:
    return {"rays": [[u.x, u.y] for u in fan.rays]}


__all__ = [
    "ClosureError",
    "CompleteSmoothFan",
    "FanError",
    "GammaSequence",
    "LatticeOverflowError",
    "blowdown",
    "blowup",
    "canonical_key",
    "canonical_key_of",
    "enumerate_fans",
    "fan_from_document",
    "fan_to_document",
    "from_gamma_sequence",
    "gamma_sequence",
    "hirzebruch",
    "picard_rank",
    "projective_plane",
    "validate",
]
