"""Rational vectors of fixed squared norm, 5-cycle search, and the
feasibility scan for symmetric-cycle base distances.

All searches are exact: vector pools hold rationals with integer-scaled
internals, meet-in-the-middle keys are integer triples, and every result is
re-validated before it is returned.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import count, islice, permutations, product
from math import gcd, isqrt, lcm

from .geom import (
    Plane,
    bisector_plane,
    circle_param,
    equidistant_circle,
    embed_isosceles,
    rational_point_on_circle,
    reflect_point,
)
from .numtheory import eq_pair_feasible, in_T
from .qcore import QPoint3, QVec3, Rational, _frac, dist_sq, midpoint, point, vec


@dataclass(frozen=True)
class VectorPool:
    """All rational vectors of squared norm t with denominators from a fixed
    set and bounded numerator height, closed under signed permutation."""

    t: int
    denominators: frozenset[int]
    height_bound: int
    vectors: tuple[QVec3, ...]

    def __post_init__(self):
        for v in self.vectors:
            if v.norm_sq() != self.t:
                raise ValueError(f"pool vector {v} has squared norm {v.norm_sq()}, not {self.t}")


def gen_vectors(t: int, denominators, height_bound: int) -> VectorPool:
    """Enumerate integer solutions a²+b²+c² = t·k² per admissible denominator
    k and emit (a/k, b/k, c/k) in every signed permutation.

    Only triples whose content is coprime to k are kept, so each vector
    appears for exactly one denominator.  Even k are excluded when
    t ≡ 2 (mod 4): then t·k² ≡ 0 (mod 4) forces a, b, c all even.
    """
    t = int(t)
    if not in_T(t):
        raise ValueError(f"{t} is not an admissible squared distance")
    denoms = sorted({int(k) for k in denominators})
    if not denoms:
        raise ValueError("empty denominator set")
    if any(k <= 0 for k in denoms):
        raise ValueError(f"denominators must be positive, got {denoms}")
    if height_bound <= 0:
        raise ValueError(f"height bound must be positive, got {height_bound}")
    vectors: list[QVec3] = []
    for k in denoms:
        if t % 4 == 2 and k % 2 == 0:
            continue
        target = t * k * k
        a_max = min(height_bound, isqrt(target))
        for a in range(a_max, -1, -1):
            rest = target - a * a
            for b in range(min(a, isqrt(rest)), -1, -1):
                c_sq = rest - b * b
                c = isqrt(c_sq)
                if c * c != c_sq or c > b:
                    continue
                if gcd(gcd(gcd(a, b), c), k) != 1:
                    continue
                for arr in sorted(set(permutations((a, b, c)))):
                    choices = [(x,) if x == 0 else (x, -x) for x in arr]
                    for signed in product(*choices):
                        vectors.append(
                            vec(Fraction(signed[0], k), Fraction(signed[1], k), Fraction(signed[2], k))
                        )
    keyed = sorted(
        set(vectors),
        key=lambda v: (max(c.denominator for c in v.components()), v.components()),
    )
    return VectorPool(t, frozenset(denoms), height_bound, tuple(keyed))


# --- 5-cycle search -------------------------------------------------------------------


def _collinear(p: QPoint3, q: QPoint3, r: QPoint3) -> bool:
    return (q - p).cross(r - q).is_zero()


def is_5cycle(points: list[QPoint3], t: Rational) -> bool:
    """Five distinct points, consecutive (cyclic) squared distances all t,
    no three cyclically consecutive points collinear."""
    t = _frac(t)
    if len(points) != 5 or len(set(points)) != 5:
        return False
    for i in range(5):
        if dist_sq(points[i], points[(i + 1) % 5]) != t:
            return False
    return all(
        not _collinear(points[(i - 1) % 5], points[i], points[(i + 1) % 5])
        for i in range(5)
    )


def _scaled_integer_pool(pool: VectorPool) -> tuple[int, list[tuple[int, int, int]]]:
    scale = lcm(*(max(c.denominator for c in v.components()) for v in pool.vectors))
    ints = []
    for v in pool.vectors:
        comps = v.components()
        ints.append(tuple(int(c * scale) for c in comps))
    return scale, ints


def find_5cycle(t: int, pool: VectorPool) -> list[QPoint3] | None:
    """Five pool vectors summing to zero, realized as a closed walk from the
    origin; meet-in-the-middle over exact integer-scaled triples.

    All pairwise sums are indexed by exact value; each (w1,w2,w3) triple sum
    probes the table for its negation.  The first step w1 ranges only over
    descending-sorted nonnegative triples: the pool is closed under signed
    coordinate permutation, so any solution maps to one with canonical w1.
    """
    if pool.t != t:
        raise ValueError(f"pool was built for t={pool.t}, not {t}")
    if not pool.vectors:
        return None
    scale, ints = _scaled_integer_pool(pool)
    n = len(ints)

    pair_sums: dict[tuple[int, int, int], list[tuple[int, int]]] = {}
    for i in range(n):
        wi = ints[i]
        for j in range(i + 1, n):
            wj = ints[j]
            key = (wi[0] + wj[0], wi[1] + wj[1], wi[2] + wj[2])
            pair_sums.setdefault(key, []).append((i, j))

    canonical = sorted(
        {tuple(sorted((abs(w[0]), abs(w[1]), abs(w[2])), reverse=True)) for w in ints}
    )
    index_of = {w: i for i, w in enumerate(ints)}
    neg = {i: index_of[(-w[0], -w[1], -w[2])] for i, w in enumerate(ints)}

    def realize(steps: tuple[int, ...]) -> list[QPoint3] | None:
        walk = [point(0, 0, 0)]
        for s in steps[:-1]:
            w = ints[s]
            prev = walk[-1]
            walk.append(
                point(
                    prev.x + Fraction(w[0], scale),
                    prev.y + Fraction(w[1], scale),
                    prev.z + Fraction(w[2], scale),
                )
            )
        return walk if is_5cycle(walk, t) else None

    for w1 in canonical:
        i1 = index_of[w1]
        for i2 in range(n):
            if i2 == neg[i1]:
                continue
            w2 = ints[i2]
            s12 = (w1[0] + w2[0], w1[1] + w2[1], w1[2] + w2[2])
            for i3 in range(n):
                if i3 == neg[i2]:
                    continue
                w3 = ints[i3]
                probe = (-s12[0] - w3[0], -s12[1] - w3[1], -s12[2] - w3[2])
                bucket = pair_sums.get(probe)
                if bucket is None:
                    continue
                for i, j in bucket:
                    for i4, i5 in ((i, j), (j, i)):
                        if i4 == neg[i3] or i5 == neg[i1]:
                            continue
                        walk = realize((i1, i2, i3, i4, i5))
                        if walk is not None:
                            return walk
    return None


# --- symmetric 5-cycles ---------------------------------------------------------------


@dataclass(frozen=True)
class SymCycle:
    """A 5-cycle x0..x4 at squared edge length t that is mirror-symmetric
    across the bisector plane of (x0, x4): x2 and midpoint(x1, x3) both lie
    on the plane."""

    x0: QPoint3
    x1: QPoint3
    x2: QPoint3
    x3: QPoint3
    x4: QPoint3
    t: Rational
    plane: Plane

    def __post_init__(self):
        pts = self.points()
        if len(set(pts)) != 5:
            raise ValueError("symmetric 5-cycle requires five distinct points")
        for i in range(5):
            d = dist_sq(pts[i], pts[(i + 1) % 5])
            if d != self.t:
                raise ValueError(
                    f"edge ({i},{(i + 1) % 5}) has squared length {d}, expected {self.t}"
                )
        if self.plane != bisector_plane(self.x0, self.x4):
            raise ValueError("plane is not the bisector plane of (x0, x4)")
        if not self.plane.contains(self.x2):
            raise ValueError("x2 is off the mirror plane")
        if not self.plane.contains(midpoint(self.x1, self.x3)):
            raise ValueError("midpoint of (x1, x3) is off the mirror plane")

    def points(self) -> tuple[QPoint3, ...]:
        return (self.x0, self.x1, self.x2, self.x3, self.x4)

    @property
    def base_dist_sq(self) -> Rational:
        """Squared distance from x2 to each of x0, x4."""
        return dist_sq(self.x0, self.x2)


def _feasible_d_candidates(t: int, d_bound: int, denominator_bound: int):
    for d in range(1, d_bound + 1):
        yield Fraction(d)
    for q in range(2, denominator_bound + 1):
        lo = t * q // 4 + 1
        hi = min(d_bound * q, 4 * t * q - 1)
        for p in range(lo, hi + 1):
            if gcd(p, q) == 1:
                yield Fraction(p, q)


def find_symmetric_5cycle(
    t: int,
    pool: VectorPool | None = None,
    *,
    d: Rational | None = None,
    d_bound: int | None = None,
    denominator_bound: int = 12,
) -> SymCycle | None:
    """Construct a symmetric 5-cycle: pick a feasible leg length d, embed the
    isosceles triangle (x0, x4, x2) with |x0-x4|² = t and legs² = d, then take
    x1 rational on the circle equidistant from x0 and x2 at √t, off the mirror
    plane, and x3 as its mirror image."""
    t = int(t)
    if not in_T(t):
        raise ValueError(f"{t} is not an admissible squared distance")
    if pool is not None and pool.t != t:
        raise ValueError(f"pool was built for t={pool.t}, not {t}")
    bound = d_bound if d_bound is not None else 4 * t - 1
    candidates = [_frac(d)] if d is not None else _feasible_d_candidates(
        t, bound, denominator_bound
    )
    for cand in candidates:
        if not eq_pair_feasible(t, cand):
            continue
        built = _symmetric_cycle_for(t, cand)
        if built is not None:
            return built
    return None


def _symmetric_cycle_for(t: int, d: Rational) -> SymCycle | None:
    x0, x4, x2 = embed_isosceles(t, d)
    mirror = bisector_plane(x0, x4)
    circle = equidistant_circle(x0, x2, t)
    base = rational_point_on_circle(circle)
    chart = circle_param(circle, base)
    params = [Fraction(0)]
    for m in range(1, 40):
        params.extend((Fraction(m), Fraction(-m)))
    for s in params:
        x1 = chart.point_at(s)
        if mirror.contains(x1) or x1 == x4:
            continue
        x3 = reflect_point(x1, mirror)
        pts = (x0, x1, x2, x3, x4)
        if len(set(pts)) != 5:
            continue
        return SymCycle(x0, x1, x2, x3, x4, Fraction(t), mirror)
    return None


# --- feasibility scan over d ------------------------------------------------------------


def parallel_first(candidates, predicate, workers: int = 1, chunk: int = 16):
    """First candidate (in order) satisfying the predicate, or None.

    With workers > 1 the predicate is evaluated across a process pool in
    chunks, but selection stays strictly by candidate order, so results are
    identical for every worker count.
    """
    if workers <= 1:
        for x in candidates:
            if predicate(x):
                return x
        return None
    it = iter(candidates)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        while True:
            block = list(islice(it, chunk * workers))
            if not block:
                return None
            for x, ok in zip(block, pool.map(predicate, block, chunksize=chunk)):
                if ok:
                    return x


def scan_d(
    t: int,
    d_bound: int,
    *,
    workers: int = 1,
    denominator_bound: int = 12,
) -> Rational | None:
    """Smallest integer d ≤ d_bound with eq_pair_feasible(t, d); when no
    integer qualifies, the first feasible rational by ascending denominator
    (then ascending numerator), or None."""
    t = int(t)
    if not in_T(t):
        raise ValueError(f"{t} is not an admissible squared distance")
    if d_bound < 1:
        raise ValueError(f"d bound must be at least 1, got {d_bound}")
    feasible = partial(eq_pair_feasible, t)
    hit = parallel_first(range(1, d_bound + 1), feasible, workers=workers)
    if hit is not None:
        return Fraction(hit)
    for q in range(2, denominator_bound + 1):
        lo = t * q // 4 + 1
        hi = min(d_bound * q, 4 * t * q - 1)
        numerators = [p for p in range(lo, hi + 1) if gcd(p, q) == 1]
        hit = parallel_first(
            (Fraction(p, q) for p in numerators), feasible, workers=workers
        )
        if hit is not None:
            return hit
    return None
