"""Lattice polygon of a divisor and its edge lengths.

For L = sum a_i D_i the polygon is P = {m : <m, u_i> >= -a_i}. When L is
ample every facet P_i is a genuine edge, the vertex m_i = P_i cap P_{i+1} is
integral, and the edge P_i runs from m_{i-1} to m_i. Edge lengths are
measured in lattice units (number of lattice points minus one).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .divisor import AmplenessVerdict, InvariantDivisor, is_ample
from .lattice import LatticeVector, det2, segment_lattice_count, solve_unimodular_pair


class NotAmpleError(ValueError):
    def __init__(self, verdict: AmplenessVerdict):
        self.verdict = verdict
        super().__init__(
            f"divisor is not ample: L.D_{verdict.witness} = {verdict.kleiman[verdict.witness]} <= 0"
            f" (Kleiman vector {list(verdict.kleiman)})"
        )


class PolytopeInvariantError(AssertionError):
    """Two independent edge-length computations disagree."""


@dataclass(frozen=True)
class DivisorPolytope:
    divisor: InvariantDivisor
    vertices: tuple[LatticeVector, ...]
    facet_volumes: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge(self, i: int) -> tuple[LatticeVector, LatticeVector]:
        """Endpoints (m_{i-1}, m_i) of the facet facing u_i."""
        n = self.n
        return self.vertices[(i - 1) % n], self.vertices[i % n]


def _require_ample(L: InvariantDivisor) -> AmplenessVerdict:
    verdict = is_ample(L)
    if not verdict.ample:
        raise NotAmpleError(verdict)
    return verdict


def polytope_of(L: InvariantDivisor) -> DivisorPolytope:
    _require_ample(L)
    fan = L.fan
    n = fan.n
    verts = tuple(
        solve_unimodular_pair(fan.ray(i), L[i], fan.ray(i + 1), L[i + 1]) for i in range(n)
    )
    vols = tuple(segment_lattice_count(verts[i - 1], verts[i]) for i in range(n))
    return DivisorPolytope(L, verts, vols)


def closed_form_volume(L: InvariantDivisor, i: int) -> int:
    """|a_{i+1} + a_{i-1} - gamma_i a_i|, the edge length read off the coefficients."""
    g = L.fan.gammas[i % L.fan.n]
    return abs(L[i + 1] + L[i - 1] - g * L[i])


def facet_volume(P: DivisorPolytope, i: int) -> int:
    i %= P.n
    by_gcd = segment_lattice_count(*P.edge(i))
    by_formula = closed_form_volume(P.divisor, i)
    if by_gcd != by_formula or by_gcd != P.facet_volumes[i]:
        raise PolytopeInvariantError(
            f"facet {i}: gcd count {by_gcd}, closed form {by_formula}, stored {P.facet_volumes[i]}"
        )
    return by_gcd


def _satisfies(L: InvariantDivisor, x: int, y: int) -> bool:
    return all(u.x * x + u.y * y >= -a for u, a in zip(L.fan.rays, L.coeffs))


def _scan(L: InvariantDivisor, box) -> list[LatticeVector]:
    xmin, xmax, ymin, ymax = box
    return [
        LatticeVector(x, y)
        for x in range(xmin, xmax + 1)
        for y in range(ymin, ymax + 1)
        if _satisfies(L, x, y)
    ]


def lattice_points(L: InvariantDivisor) -> list[LatticeVector]:
    """All lattice points of P for ample L, by a bounding-box scan (sorted)."""
    P = polytope_of(L)
    xs = [m.x for m in P.vertices]
    ys = [m.y for m in P.vertices]
    return _scan(L, (min(xs), max(xs), min(ys), max(ys)))


def real_vertices(L: InvariantDivisor) -> list[tuple[Fraction, Fraction]]:
    """Vertices of the real polygon P, for any divisor (possibly empty list).

    Candidates are intersections of every pair of non-parallel boundary
    lines; those satisfying all constraints are kept.
    """
    rays = L.fan.rays
    out = set()
    for i, j in combinations(range(len(rays)), 2):
        u, v = rays[i], rays[j]
        d = det2(u, v)
        if d == 0:
            continue
        # <m,u> = -a_i, <m,v> = -a_j  (Cramer)
        bi, bj = -L.coeffs[i], -L.coeffs[j]
        x = Fraction(bi * v.y - bj * u.y, d)
        y = Fraction(u.x * bj - v.x * bi, d)
        if all(w.x * x + w.y * y >= -a for w, a in zip(rays, L.coeffs)):
            out.add((x, y))
    return sorted(out)


def lattice_points_any(L: InvariantDivisor) -> list[LatticeVector]:
    """Lattice points of P without the ampleness precondition."""
    verts = real_vertices(L)
    if not verts:
        return []
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    box = (math.ceil(min(xs)), math.floor(max(xs)), math.ceil(min(ys)), math.floor(max(ys)))
    return _scan(L, box)


@dataclass(frozen=True)
class FacetDiagnostic:
    points: tuple[LatticeVector, ...]
    facets: tuple[tuple[LatticeVector, ...], ...]

    @property
    def empty_facets(self) -> list[int]:
        return [i for i, f in enumerate(self.facets) if not f]

    def lattice_volume(self, i: int) -> int:
        """Lattice points on P_i minus one; -1 for an empty facet."""
        return len(self.facets[i]) - 1


def facet_diagnostic(L: InvariantDivisor) -> FacetDiagnostic:
    """Lattice points of every facet P_i, valid also for non-ample L.

    Useful to see, for -(K + D), that the origin lies on P_i for each i in the
    support of D, and which facets collapse.
    """
    pts = lattice_points_any(L)
    facets = tuple(
        tuple(m for m in pts if m.dot(u) == -a) for u, a in zip(L.fan.rays, L.coeffs)
    )
    return FacetDiagnostic(tuple(pts), facets)


def is_convex_ccw(vertices) -> bool:
    """Every turn of the closed vertex cycle is strictly counterclockwise."""
    n = len(vertices)
    for i in range(n):
        a, b, c = vertices[i - 1], vertices[i], vertices[(i + 1) % n]
        if det2(b - a, c - b) <= 0:
            return False
    return True


def polytope_to_document(P: DivisorPolytope) -> dict:
    return {
        "vertices": [[m.x, m.y] for m in P.vertices],
        "facet_volumes": list(P.facet_volumes),
    }
