"""Classification of toric log del Pezzo pairs (X, D) and the theorem suites.

Every verdict is recomputed from the Kleiman vector of -(K_X + D); no verdict
is ever inferred from another one (e.g. by monotonicity in D).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .divisor import SupportSet, intersect_curve, is_ample, log_anticanonical, divisor
from .fan import (
    CompleteSmoothFan,
    GammaSequence,
    canonical_key,
    enumerate_fans,
    from_gamma_sequence,
    hirzebruch,
    projective_plane,
)
from .lattice import segment_lattice_count
from .polytope import closed_form_volume, lattice_points, polytope_of

MAX_RAYS = 20

THEOREM_1_NOTE = (
    "checked for nonempty D only: with D empty the statement would exclude toric "
    "del Pezzo surfaces of Picard rank 3 and 4, which exist"
)


@dataclass(frozen=True)
class ClassificationRecord:
    delta: SupportSet
    ample: bool
    kleiman_vector: tuple[int, ...]
    witness: Optional[int]

    @property
    def mask(self) -> int:
        return self.delta.mask

    @property
    def pure_del_pezzo(self) -> bool:
        """The empty-support row: X itself is del Pezzo."""
        return len(self.delta) == 0

    def to_document(self) -> dict:
        return {
            "delta": self.delta.sorted(),
            "ample": self.ample,
            "kleiman": list(self.kleiman_vector),
            "witness": self.witness,
        }


def classify_pair(fan: CompleteSmoothFan, delta: SupportSet) -> ClassificationRecord:
    v = is_ample(log_anticanonical(fan, delta))
    return ClassificationRecord(delta, v.ample, v.kleiman, v.witness)


def classify_pairs(fan: CompleteSmoothFan) -> list[ClassificationRecord]:
    """One record per support set, in bitmask order (bit i set iff i in D)."""
    if fan.n > MAX_RAYS:
        raise ValueError(f"refusing to classify 2^{fan.n} support sets (limit {MAX_RAYS} rays)")
    return [classify_pair(fan, SupportSet.from_mask(fan, mask)) for mask in range(1 << fan.n)]


def classification_document(fan: CompleteSmoothFan, records, bound=None) -> dict:
    return {
        "fan": list(canonical_key(fan)),
        "bound": bound,
        "records": [r.to_document() for r in records],
    }


CSV_HEADER = ["fan", "delta", "ample", "kleiman", "witness"]


def classification_rows(fan: CompleteSmoothFan, records) -> list[list[str]]:
    key = " ".join(map(str, canonical_key(fan)))
    return [
        [
            key,
            " ".join(map(str, r.delta.sorted())),
            "true" if r.ample else "false",
            " ".join(map(str, r.kleiman_vector)),
            "" if r.witness is None else str(r.witness),
        ]
        for r in records
    ]


# -- verification reports ----------------------------------------------------

@dataclass
class Failure:
    fan: GammaSequence
    delta: list[int]
    expected: bool
    got: bool
    kleiman: list[int]
    witness: Optional[int]
    detail: str = ""

    def to_document(self) -> dict:
        return {
            "fan": list(self.fan),
            "delta": self.delta,
            "expected_ample": self.expected,
            "ample": self.got,
            "kleiman": self.kleiman,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass
class Report:
    name: str
    scope: dict
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_document(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "scope": self.scope,
            "checked": self.checked,
            "stats": self.stats,
            "notes": self.notes,
            "failures": [f.to_document() for f in self.failures],
        }

    def summary_lines(self) -> list[str]:
        lines = [f"{self.name}: {self.status}"]
        lines += [f"  {k}: {v}" for k, v in self.scope.items()]
        lines.append(f"  verdicts checked: {self.checked}")
        lines += [f"  {k}: {v}" for k, v in self.stats.items()]
        lines += [f"  note: {n}" for n in self.notes]
        if self.failures:
            f = self.failures[0]
            lines.append(
                f"  first counterexample: fan {list(f.fan)} delta {f.delta} expected "
                f"{'ample' if f.expected else 'not ample'}, got {'ample' if f.got else 'not ample'}, "
                f"kleiman {f.kleiman}, witness {f.witness} {f.detail}".rstrip()
            )
        return lines


Classifier = Callable[[CompleteSmoothFan], Sequence[ClassificationRecord]]


def _compare(report: Report, fan, records, expected: Callable[[int], bool]):
    key = canonical_key(fan)
    for rec in records:
        report.checked += 1
        want = expected(rec.mask)
        if rec.ample != want:
            report.failures.append(
                Failure(key, rec.delta.sorted(), want, rec.ample, list(rec.kleiman_vector), rec.witness)
            )


P2_LOG_DEL_PEZZO = frozenset({0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110})


def verify_theorem_2(classifier: Classifier = classify_pairs) -> Report:
    """P^2: -(K+D) is ample exactly for D empty, one line, or two lines."""
    report = Report("theorem 2 (P^2)", {"fan": "P^2, rays (-1,-1), (1,0), (0,1)"})
    fan = projective_plane()
    _compare(report, fan, classifier(fan), lambda mask: mask in P2_LOG_DEL_PEZZO)
    return report


def hirzebruch_expected(r: int, mask: int) -> bool:
    """Expected ampleness of -(K+D) on F_r, D supported on the bits of ``mask``.

    Ray order u_0 = -e_2, u_1 = e_1, u_2 = e_2, u_3 = -e_1 + r e_2.
    """
    support = frozenset(i for i in range(4) if mask >> i & 1)
    if len(support) >= 3:
        return False
    if support in (frozenset(), frozenset({0})):
        return r in (0, 1)
    if support in ({1}, {3}, {0, 1}, {0, 3}):
        return r == 0
    if support in ({2}, {1, 2}, {2, 3}):
        return True
    if support in ({0, 2}, {1, 3}):
        return False
    raise AssertionError(f"unhandled support {sorted(support)}")


def verify_theorem_3(r_max: int = 20, classifier: Classifier = classify_pairs) -> Report:
    """Hirzebruch surfaces F_0 .. F_{r_max}, all 16 support sets each."""
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    report = Report("theorem 3 (Hirzebruch surfaces)", {"r range": f"0..{r_max}"})
    for r in range(r_max + 1):
        fan = hirzebruch(r)
        _compare(report, fan, classifier(fan), lambda mask, r=r: hirzebruch_expected(r, mask))
    return report


def verify_theorem_1(
    n_set: Iterable[int] = (5, 6, 7),
    gamma_bound: int = 6,
    classifier: Classifier = classify_pairs,
) -> Report:
    """Picard rank >= 3: no nonempty reduced boundary D makes -(K+D) ample.

    Bounded exhaustive check over enumerate_fans(n, gamma_bound). The support
    size >= 3 statement is additionally checked on the 3- and 4-ray fans.
    """
    n_set = sorted(set(n_set))
    if not n_set or n_set[0] < 5:
        raise ValueError("theorem 1 concerns fans with at least 5 rays")
    report = Report(
        "theorem 1 (Picard rank >= 3)",
        {"rays": ",".join(map(str, n_set)), "gamma bound": gamma_bound},
        notes=[THEOREM_1_NOTE],
    )
    fans_examined = 0
    del_pezzo = 0
    for n in n_set:
        for key in enumerate_fans(n, gamma_bound):
            fan = from_gamma_sequence(key)
            fans_examined += 1
            records = classifier(fan)
            for rec in records:
                if rec.pure_del_pezzo:
                    del_pezzo += rec.ample
                    continue
                report.checked += 1
                if rec.ample or rec.witness is None:
                    report.failures.append(
                        Failure(key, rec.delta.sorted(), False, rec.ample, list(rec.kleiman_vector), rec.witness)
                    )
    small = 0
    for n in (3, 4):
        for key in enumerate_fans(n, gamma_bound):
            fan = from_gamma_sequence(key)
            small += 1
            for rec in classifier(fan):
                if len(rec.delta) < 3:
                    continue
                report.checked += 1
                if rec.ample:
                    report.failures.append(
                        Failure(key, rec.delta.sorted(), False, True, list(rec.kleiman_vector), None,
                                "(support size >= 3)")
                    )
    report.stats["fans examined"] = fans_examined
    report.stats["fans with -K ample (del Pezzo)"] = del_pezzo
    report.stats["3/4-ray fans checked for |D| >= 3"] = small
    return report


def brute_force_edge_volume(points, L, i: int) -> int:
    u = L.fan.ray(i)
    a = L[i]
    return sum(1 for m in points if m.dot(u) == -a) - 1


def verify_volumes(
    samples: int = 1000,
    n_max: int = 6,
    gamma_bound: int = 3,
    coeff_bound: int = 4,
    seed: int = 0,
) -> Report:
    """Edge length of P_i, three ways, against the Kleiman number L . D_i.

    Samples uniformly among fans from enumerate_fans(3..n_max, gamma_bound)
    and coefficient vectors in [-coeff_bound, coeff_bound]^n, keeping the
    ample ones until ``samples`` divisors have been checked.
    """
    rng = random.Random(seed)
    fans = [from_gamma_sequence(k) for n in range(3, n_max + 1) for k in enumerate_fans(n, gamma_bound)]
    report = Report(
        "volumes (edge length = intersection number)",
        {"samples": samples, "rays": f"3..{n_max}", "gamma bound": gamma_bound,
         "coefficient bound": coeff_bound, "seed": seed},
    )
    drawn = 0
    found = 0
    while found < samples:
        fan = rng.choice(fans)
        L = divisor(fan, [rng.randint(-coeff_bound, coeff_bound) for _ in range(fan.n)])
        drawn += 1
        if not is_ample(L):
            continue
        found += 1
        P = polytope_of(L)
        pts = lattice_points(L)
        for i in range(fan.n):
            report.checked += 1
            kleiman = intersect_curve(L, i)
            ways = (
                closed_form_volume(L, i),
                segment_lattice_count(*P.edge(i)),
                brute_force_edge_volume(pts, L, i),
            )
            if any(w != kleiman for w in ways):
                report.failures.append(
                    Failure(canonical_key(fan), [], True, True, list(P.divisor.coeffs), i,
                            f"coeffs {list(L.coeffs)} facet {i}: closed form/gcd/scan {ways} vs L.D_i {kleiman}")
                )
    report.stats["fans in pool"] = len(fans)
    report.stats["coefficient vectors drawn"] = drawn
    return report
