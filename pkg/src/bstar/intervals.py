"""Finite unions of intervals in [0,1) and their largest symmetric subsets.

For E a union of intervals, the measure of the largest symmetric subset
with reflection x -> s - x is

    m(s) = sum_{i,j} max(0, min(s - 2a_i, 2b_j - s)/2 - max(s - 2b_i, 2a_j - s)/2)

and m is piecewise linear in s with kinks only where s is a sum of two
interval endpoints.  D(E) = max_s m(s) is therefore computed exactly by
scanning the endpoint sums; with rational endpoints everything reduces
to integer arithmetic over a common denominator.

Geometry "line" reflects within the reals; "circle" reflects modulo 1,
reusing the same overlap computation after splitting wrapped intervals.
"""
from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .intsets import IntSet

Number = object  # Fraction or float, tagged by IntervalSet.exact


class GeometryMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IntervalSet:
    """Disjoint sorted half-open intervals [a, b) inside [0, 1)."""

    intervals: tuple[tuple[Number, Number], ...]
    geometry: str = "line"

    def __post_init__(self):
        if self.geometry not in ("line", "circle"):
            raise ValueError("geometry must be 'line' or 'circle'")
        prev_end = None
        for a, b in self.intervals:
            if not 0 <= a < b <= 1:
                raise ValueError("intervals must satisfy 0 <= a < b <= 1")
            if prev_end is not None and a < prev_end:
                raise ValueError("intervals must be disjoint and sorted")
            prev_end = b

    @classmethod
    def of(cls, pairs: Sequence[tuple[Number, Number]], geometry: str = "line") -> "IntervalSet":
        """Sort and merge touching or overlapping intervals."""
        cleaned = sorted((a, b) for a, b in pairs if b > a)
        merged: list[list[Number]] = []
        for a, b in cleaned:
            if merged and a <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        return cls(tuple((a, b) for a, b in merged), geometry)

    @property
    def exact(self) -> bool:
        return all(isinstance(a, Fraction) and isinstance(b, Fraction)
                   for a, b in self.intervals)

    @property
    def measure(self):
        zero = Fraction(0) if self.exact else 0.0
        return sum((b - a for a, b in self.intervals), zero)

    def endpoints(self) -> list:
        out = []
        for a, b in self.intervals:
            out.append(a)
            out.append(b)
        return out

    def scale(self, t) -> "IntervalSet":
        return IntervalSet(tuple((a * t, b * t) for a, b in self.intervals), self.geometry)

    def as_floats(self) -> "IntervalSet":
        return IntervalSet(tuple((float(a), float(b)) for a, b in self.intervals), self.geometry)

    def to_json(self) -> str:
        if self.exact:
            ivs = [[a.numerator, a.denominator, b.numerator, b.denominator]
                   for a, b in self.intervals]
            return json.dumps({"geometry": self.geometry, "mode": "rational", "intervals": ivs})
        return json.dumps({
            "geometry": self.geometry, "mode": "float",
            "intervals": [[float(a), float(b)] for a, b in self.intervals],
        })

    @classmethod
    def from_json(cls, text: str) -> "IntervalSet":
        obj = json.loads(text)
        if obj["mode"] == "rational":
            ivs = [(Fraction(an, ad), Fraction(bn, bd)) for an, ad, bn, bd in obj["intervals"]]
        else:
            ivs = [(a, b) for a, b in obj["intervals"]]
        return cls(tuple(ivs), obj["geometry"])


@dataclass(frozen=True)
class SymmetricSubsetResult:
    d_value: Number
    center: Number
    per_center_function: Optional[tuple[tuple[Number, Number], ...]] = None


def _overlap_units(sigma: int, starts: Sequence[int], ends: Sequence[int]) -> int:
    """m(sigma/L) in units of 1/(2L) for integer endpoint coordinates."""
    total = 0
    for i in range(len(starts)):
        lo_i = sigma - 2 * ends[i]
        hi_i = sigma - 2 * starts[i]
        for j in range(len(starts)):
            lo = max(lo_i, 2 * starts[j] - sigma)
            hi = min(hi_i, 2 * ends[j] - sigma)
            if hi > lo:
                total += hi - lo
    return total


def _overlap_float(s: float, intervals) -> float:
    total = 0.0
    for a1, b1 in intervals:
        lo1 = s - b1
        hi1 = s - a1
        for a2, b2 in intervals:
            lo = lo1 if lo1 > a2 else a2
            hi = hi1 if hi1 < b2 else b2
            if hi > lo:
                total += hi - lo
    return total


def _circle_pieces(a, length):
    """Split [a mod 1, a mod 1 + length) into pieces inside [0, 1)."""
    a = a - math.floor(a)
    if a + length <= 1:
        return [(a, a + length)]
    return [(a, 1), (0, a + length - 1)]


def _overlap_circle(s, intervals):
    """Measure of E intersect (s - E mod 1)."""
    total = 0 * s
    for a1, b1 in intervals:
        for ra, rb in _circle_pieces(s - b1, b1 - a1):
            for a2, b2 in intervals:
                lo = max(ra, a2)
                hi = min(rb, b2)
                if hi > lo:
                    total += hi - lo
    return total


def largest_symmetric_subset(e: IntervalSet,
                             include_profile: bool = False) -> SymmetricSubsetResult:
    """Exact D(E) by scanning reflection parameters at endpoint sums.

    Rational endpoints are mapped to an integer grid over the lcm of the
    denominators so the maximum (and the bridge identity to integer-set
    representation counts) is exact; float endpoints use plain float
    arithmetic.  Ties break toward the smaller center.
    """
    if not e.intervals:
        zero = Fraction(0) if e.exact else 0.0
        return SymmetricSubsetResult(zero, zero, ((zero, zero),) if include_profile else None)
    if e.geometry == "circle":
        return _largest_symmetric_circle(e, include_profile)
    if e.exact:
        denom = math.lcm(*(x.denominator for x in e.endpoints()))
        starts = [int(a * denom) for a, _ in e.intervals]
        ends = [int(b * denom) for _, b in e.intervals]
        coords = sorted(set(starts + ends))
        best_units, best_sigma = -1, 0
        profile = []
        for sigma in sorted({u + v for u, v in itertools.combinations_with_replacement(coords, 2)}):
            units = _overlap_units(sigma, starts, ends)
            if include_profile:
                profile.append((Fraction(sigma, 2 * denom), Fraction(units, 2 * denom)))
            if units > best_units:
                best_units, best_sigma = units, sigma
        return SymmetricSubsetResult(
            Fraction(best_units, 2 * denom),
            Fraction(best_sigma, 2 * denom),
            tuple(profile) if include_profile else None,
        )
    ivs = e.intervals
    pts = e.endpoints()
    best, best_s = -1.0, 0.0
    profile = []
    for s in sorted({u + v for u, v in itertools.combinations_with_replacement(pts, 2)}):
        val = _overlap_float(s, ivs)
        if include_profile:
            profile.append((s / 2.0, val))
        if val > best:
            best, best_s = val, s
    return SymmetricSubsetResult(best, best_s / 2.0, tuple(profile) if include_profile else None)


def _largest_symmetric_circle(e: IntervalSet, include_profile: bool):
    pts = e.endpoints()
    one = Fraction(1) if e.exact else 1.0
    sums = sorted({(u + v) % one for u, v in itertools.combinations_with_replacement(pts, 2)})
    best, best_s = -1 * one, 0 * one
    profile = []
    for s in sums:
        val = _overlap_circle(s, e.intervals)
        if include_profile:
            profile.append((s / 2, val))
        if val > best:
            best, best_s = val, s
    return SymmetricSubsetResult(best, best_s / 2, tuple(profile) if include_profile else None)


def symmetric_difference_measure(s: IntervalSet, t: IntervalSet):
    """lambda(S diamond T) by a two-set endpoint sweep."""
    if s.geometry != t.geometry:
        raise GeometryMismatch("cannot mix line and circle sets")
    events = sorted(set(s.endpoints()) | set(t.endpoints()))
    exact = s.exact and t.exact
    total = Fraction(0) if exact else 0.0

    def covered(ivs, x):
        return any(a <= x < b for a, b in ivs)

    for lo, hi in zip(events, events[1:]):
        if covered(s.intervals, lo) != covered(t.intervals, lo):
            total += hi - lo
    return total


def a_of_s(s, n: int) -> IntervalSet:
    """Block picture of an integer set: the union of [(v-1)/n, v/n)."""
    if isinstance(s, IntSet):
        if s.modulus is not None:
            raise ValueError("block picture expects a plain integer set")
        values = s.elements
    else:
        values = tuple(sorted(set(s)))
    if any(v < 1 or v > n for v in values):
        raise ValueError("elements must lie in {1..n}")
    return IntervalSet.of([(Fraction(v - 1, n), Fraction(v, n)) for v in values])


# ---------------------------------------------------------------------------
# upper bounds on Delta_k via derivative-free minimization
# ---------------------------------------------------------------------------

def _build_intervals(vec, k: int, eps: float):
    """Gap/length vector -> k intervals of total measure eps in [0, 1]."""
    gaps = vec[0::2]
    lens = vec[1::2]
    sl = sum(lens)
    if sl <= 0:
        return None
    lens = [x * eps / sl for x in lens]
    sg = sum(gaps)
    if sg <= 0:
        gaps = [0.0] * k + [1.0 - eps]
    else:
        gaps = [x * (1.0 - eps) / sg for x in gaps]
    out = []
    pos = 0.0
    for i in range(k):
        pos += gaps[i]
        out.append((pos, pos + lens[i]))
        pos += lens[i]
    return out


def _d_float(intervals) -> float:
    pts = []
    for a, b in intervals:
        pts.append(a)
        pts.append(b)
    best = 0.0
    seen = set()
    for i in range(len(pts)):
        for j in range(i, len(pts)):
            s = pts[i] + pts[j]
            if s in seen:
                continue
            seen.add(s)
            v = _overlap_float(s, intervals)
            if v > best:
                best = v
    return best


def _coarse_descent(vec, k, eps, value):
    step = 0.25
    while step > 1e-4:
        improved = False
        for i in range(len(vec)):
            for sgn in (1.0, -1.0):
                trial = list(vec)
                trial[i] = max(0.0, trial[i] + sgn * step)
                ivs = _build_intervals(trial, k, eps)
                if ivs is None:
                    continue
                v = _d_float(ivs)
                if v < value - 1e-12:
                    vec, value = trial, v
                    improved = True
        if not improved:
            step *= 0.5
    return vec, value


def _polish(intervals, value, floor=1e-9):
    """Measure-preserving moves: whole-interval shifts and length transfers."""
    ivs = [list(p) for p in intervals]
    k = len(ivs)

    def valid(v):
        pos = 0.0
        for a, b in v:
            if a < pos - 1e-15 or b <= a:
                return False
            pos = b
        return pos <= 1.0 + 1e-15

    moves = [("shift", i, 0) for i in range(k)]
    moves += [(kind, i, j) for i in range(k) for j in range(k) if i != j
              for kind in ("xfer_rr", "xfer_rl")]
    step = 0.02
    while step > floor:
        improved = False
        for kind, i, j in moves:
            for sgn in (1.0, -1.0):
                d = sgn * step
                trial = [list(p) for p in ivs]
                if kind == "shift":
                    trial[i][0] += d
                    trial[i][1] += d
                elif kind == "xfer_rr":
                    trial[i][1] -= d
                    trial[j][1] += d
                else:
                    trial[i][1] -= d
                    trial[j][0] -= d
                if not valid(trial):
                    continue
                v = _d_float([tuple(p) for p in trial])
                if v < value - 1e-15:
                    ivs, value = trial, v
                    improved = True
        if not improved:
            step *= 0.5
    return [tuple(p) for p in ivs], value


def delta_k_upper(k: int, epsilon: float, restarts: int = 200,
                  seed: int = 0) -> tuple[float, IntervalSet]:
    """Best found D(E) over unions of k intervals with measure epsilon.

    Multi-start: random gap/length seeds, a renormalized coordinate
    descent, then a measure-preserving polish.  The result is an upper
    bound on the k-interval symmetric-subset threshold, not a certified
    infimum.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must lie in (0, 1]")
    if k == 1:
        witness = IntervalSet.of([(0.0, float(epsilon))])
        return float(epsilon), witness
    rng = random.Random(seed)
    dim = 2 * k + 1
    best_val, best_ivs = math.inf, None
    for _ in range(restarts):
        vec = [rng.random() for _ in range(dim)]
        ivs = _build_intervals(vec, k, epsilon)
        if ivs is None:
            continue
        vec, val = _coarse_descent(vec, k, epsilon, _d_float(ivs))
        ivs, val = _polish(_build_intervals(vec, k, epsilon), val)
        if val < best_val:
            best_val, best_ivs = val, ivs
    clipped = [(min(max(a, 0.0), 1.0), min(max(b, 0.0), 1.0)) for a, b in best_ivs]
    return best_val, IntervalSet.of(clipped)
