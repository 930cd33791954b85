"""Exact rational geometry in Q^3.

Planes, reflections, equidistant circles, rational conic parameterization,
circumcenters, apex points over triangles, and exact isosceles-triangle
embeddings.  Everything is Fraction arithmetic; nothing is approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numtheory import TernaryForm, legendre_solution, three_rational_squares
from .qcore import (
    QPoint3,
    QVec3,
    Rational,
    _frac,
    dist_sq,
    midpoint,
    norm_sq,
    point,
    rational_square_root,
    vec,
)


class _Infinity:
    """Sentinel for the point at infinity of a rational parameter line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"


INF = _Infinity()

_AXES = ("x", "y", "z")


# --- planes and reflections ---------------------------------------------------


@dataclass(frozen=True)
class Plane:
    """Plane normal . X = offset."""

    normal: QVec3
    offset: Rational

    def __post_init__(self):
        if self.normal.is_zero():
            raise ValueError("plane normal must be nonzero")

    def eval(self, p: QPoint3) -> Fraction:
        """Signed affine value normal . p - offset (zero exactly on the plane)."""
        n = self.normal
        return n.dx * p.x + n.dy * p.y + n.dz * p.z - self.offset

    def contains(self, p: QPoint3) -> bool:
        return self.eval(p) == 0


def reflect(v: QVec3, mirror: QVec3) -> QVec3:
    """Reflection of v across the hyperplane orthogonal to mirror."""
    if mirror.is_zero():
        raise ValueError("mirror vector must be nonzero")
    coeff = 2 * v.dot(mirror) / mirror.dot(mirror)
    return v - mirror.scale(coeff)


def reflect_point(p: QPoint3, plane: Plane) -> QPoint3:
    """Mirror image of p across the plane."""
    n = plane.normal
    coeff = 2 * plane.eval(p) / n.dot(n)
    return p + n.scale(-coeff)


def bisector_plane(p: QPoint3, q: QPoint3) -> Plane:
    """The plane of points equidistant from p and q."""
    if p == q:
        raise ValueError("coincident points have no bisector plane")
    n = q - p
    m = midpoint(p, q)
    return Plane(n, n.dx * m.x + n.dy * m.y + n.dz * m.z)


# --- circles -------------------------------------------------------------------


@dataclass(frozen=True)
class RCircle:
    """Circle in Q^3 held as center + squared radius + carrier plane."""

    center: QPoint3
    radius_sq: Rational
    plane: Plane

    def __post_init__(self):
        if self.radius_sq < 0:
            raise ValueError(f"negative squared radius {self.radius_sq}")
        if not self.plane.contains(self.center):
            raise ValueError("circle center must lie on its carrier plane")

    @property
    def degenerate(self) -> bool:
        return self.radius_sq == 0

    def contains(self, p: QPoint3) -> bool:
        return self.plane.contains(p) and dist_sq(p, self.center) == self.radius_sq


def equidistant_circle(p: QPoint3, q: QPoint3, t: Rational) -> RCircle:
    """The circle of points at squared distance t from both p and q.

    Its center is the midpoint, its plane the bisector plane, and its squared
    radius t - |pq|^2/4; an empty locus (negative squared radius) is an error,
    a single point (zero) is allowed and flagged degenerate.
    """
    t = _frac(t)
    if t <= 0:
        raise ValueError(f"squared distance must be positive, got {t}")
    plane = bisector_plane(p, q)
    radius_sq = t - dist_sq(p, q) / 4
    if radius_sq < 0:
        raise ValueError(
            f"no points at squared distance {t} from both ends of a segment of squared length {dist_sq(p, q)}"
        )
    return RCircle(midpoint(p, q), radius_sq, plane)


# --- rational conic parameterization --------------------------------------------


@dataclass(frozen=True)
class ConicParam:
    """Conic a x^2 + b xy + c y^2 + d x + e y + f = 0 with a rational base point.

    Chords through the base point parameterize the rational points by slope.
    """

    a: Rational
    b: Rational
    c: Rational
    d: Rational
    e: Rational
    f: Rational
    base: tuple[Rational, Rational]

    def __post_init__(self):
        xi, eta = self.base
        val = (
            self.a * xi * xi
            + self.b * xi * eta
            + self.c * eta * eta
            + self.d * xi
            + self.e * eta
            + self.f
        )
        if val != 0:
            raise ValueError(f"base point {self.base} is not on the conic (value {val})")

    def value(self, x: Rational, y: Rational) -> Fraction:
        return self.a * x * x + self.b * x * y + self.c * y * y + self.d * x + self.e * y + self.f


def conic_point(cp: ConicParam, s: Rational | _Infinity) -> tuple[Fraction, Fraction]:
    """The second intersection of the conic with the slope-s line through the base.

    The parameter s = inf uses the vertical line through the base (requires a
    nonzero y^2 coefficient).
    """
    a, b, c, d, e = cp.a, cp.b, cp.c, cp.d, cp.e
    xi, eta = cp.base
    if s is INF:
        if c == 0:
            raise ValueError("no vertical-line value: the y^2 coefficient is zero")
        return (_frac(xi), (-b * xi - c * eta - e) / c)
    s = _frac(s)
    denom = a + b * s + c * s * s
    if denom == 0:
        raise ValueError(f"parameter {s} is an asymptotic direction of the conic")
    x = (-d - a * xi - b * eta - (2 * c * eta + e) * s + c * xi * s * s) / denom
    y = (a * eta - (2 * a * xi + d) * s - (b * xi + c * eta + e) * s * s) / denom
    return (x, y)


def tangent_param(cp: ConicParam) -> Fraction | _Infinity:
    """The parameter value at which conic_point returns the base point itself:
    the slope of the conic's tangent at the base."""
    xi, eta = cp.base
    num = 2 * cp.a * xi + cp.b * eta + cp.d
    den = cp.b * xi + 2 * cp.c * eta + cp.e
    if den == 0:
        return INF
    return -num / den


# --- circles as one-parameter rational families -----------------------------------


@dataclass(frozen=True)
class CircleParam:
    """A circle with its planar conic model and the data to lift points back.

    The coordinate named `eliminated_axis` was solved out of the plane
    equation; conic coordinates are the remaining two axes in x,y,z order.
    """

    circle: RCircle
    conic: ConicParam
    eliminated_axis: str

    def _axes(self) -> tuple[int, int, int]:
        k = _AXES.index(self.eliminated_axis)
        i, j = (n for n in range(3) if n != k)
        return i, j, k

    def lift(self, u: Rational, v: Rational) -> QPoint3:
        """Recover the space point with kept coordinates (u, v)."""
        i, j, k = self._axes()
        n = self.circle.plane.normal.components()
        coords = [Fraction(0)] * 3
        coords[i], coords[j] = _frac(u), _frac(v)
        coords[k] = (self.circle.plane.offset - n[i] * coords[i] - n[j] * coords[j]) / n[k]
        return point(*coords)

    def project(self, p: QPoint3) -> tuple[Fraction, Fraction]:
        i, j, _ = self._axes()
        coords = p.coords()
        return (coords[i], coords[j])

    def point_at(self, s: Rational | _Infinity) -> QPoint3:
        u, v = conic_point(self.conic, s)
        return self.lift(u, v)

    def param_for_point(self, p: QPoint3) -> Fraction | _Infinity:
        """The parameter value s with point_at(s) = p, for p on the circle."""
        if not self.circle.contains(p):
            raise ValueError(f"{p} is not on the circle")
        u, v = self.project(p)
        xi, eta = self.conic.base
        if (u, v) == (xi, eta):
            return tangent_param(self.conic)
        if u == xi:
            return INF
        return (v - eta) / (u - xi)


def circle_param(c: RCircle, known_point: QPoint3) -> CircleParam:
    """Model a circle as a rational one-parameter family seeded at a known point.

    The plane equation eliminates the coordinate with the largest absolute
    normal component (ties prefer z, then y, then x), the sphere-about-center
    equation becomes a planar conic in the other two, and the known point's
    projection is the chord base point.
    """
    if c.degenerate:
        raise ValueError("degenerate circle has a single point; nothing to parameterize")
    if not c.contains(known_point):
        raise ValueError(f"{known_point} is not on the circle")
    n = c.plane.normal.components()
    biggest = max(abs(x) for x in n)
    k = max(i for i in range(3) if abs(n[i]) == biggest)
    i, j = (m for m in range(3) if m != k)
    # plane: n_i u + n_j v + n_k w = offset, so w = (W0 - n_i u - n_j v)/n_k
    center = c.center.coords()
    W = c.plane.offset - n[k] * center[k]
    g = n[k]
    a = 1 + n[i] * n[i] / (g * g)
    b = 2 * n[i] * n[j] / (g * g)
    cc = 1 + n[j] * n[j] / (g * g)
    d = -2 * center[i] - 2 * n[i] * W / (g * g)
    e = -2 * center[j] - 2 * n[j] * W / (g * g)
    f = center[i] ** 2 + center[j] ** 2 + W * W / (g * g) - c.radius_sq
    known = known_point.coords()
    conic = ConicParam(a, b, cc, d, e, f, (known[i], known[j]))
    return CircleParam(c, conic, _AXES[k])


# --- circumcenters and apexes ------------------------------------------------------


def circumcenter(p1: QPoint3, p2: QPoint3, p3: QPoint3) -> tuple[QPoint3, Fraction, QVec3]:
    """Center, squared circumradius, and plane normal of a nondegenerate triangle."""
    u = p2 - p1
    v = p3 - p1
    normal = u.cross(v)
    if normal.is_zero():
        raise ValueError("collinear points have no circumcenter")
    uu, vv, uv = u.dot(u), v.dot(v), u.dot(v)
    det = uu * vv - uv * uv
    x = (uu * vv - uv * vv) / (2 * det)
    y = (uu * vv - uv * uu) / (2 * det)
    center = p1 + u.scale(x) + v.scale(y)
    radius_sq = dist_sq(center, p1)
    assert dist_sq(center, p2) == radius_sq and dist_sq(center, p3) == radius_sq
    return center, radius_sq, normal


APEX_OK = "ok"
APEX_TOO_FAR = "circumradius-exceeds-t"
APEX_IRRATIONAL = "irrational-apex"


def apex_points_detailed(
    p1: QPoint3, p2: QPoint3, p3: QPoint3, t: Rational
) -> tuple[list[QPoint3], str]:
    """Rational points at squared distance t from all of p1, p2, p3, with a
    reason when there are none: the circumradius already exceeding t is
    distinguished from the apex offset not being a rational square."""
    t = _frac(t)
    if t <= 0:
        raise ValueError(f"squared distance must be positive, got {t}")
    center, radius_sq, normal = circumcenter(p1, p2, p3)
    if radius_sq > t:
        return [], APEX_TOO_FAR
    s_sq = (t - radius_sq) / normal.dot(normal)
    s = rational_square_root(s_sq)
    if s is None:
        return [], APEX_IRRATIONAL
    if s == 0:
        return [center], APEX_OK
    return [center + normal.scale(s), center + normal.scale(-s)], APEX_OK


def apex_points(p1: QPoint3, p2: QPoint3, p3: QPoint3, t: Rational) -> list[QPoint3]:
    """Rational points at squared distance t from all three inputs (0, 1 or 2)."""
    points, _ = apex_points_detailed(p1, p2, p3, t)
    return points


# --- exact isosceles embedding -------------------------------------------------------


def _plane_frame(n: QVec3) -> tuple[QVec3, QVec3]:
    """An orthogonal rational basis (e1, e2) of the plane normal to n."""
    for axis in (vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)):
        e1 = n.cross(axis)
        if not e1.is_zero():
            return e1, n.cross(e1)
    raise AssertionError("nonzero vector has a nonzero cross product with some axis")


def rational_point_on_circle(c: RCircle) -> QPoint3:
    """Some rational point of the circle, constructed exactly.

    Writes the circle as lambda^2 |e1|^2 + mu^2 |e2|^2 = radius_sq over an
    orthogonal plane frame and solves the homogenized ternary form; raises
    UnsolvableFormError when the circle has no rational points.
    """
    if c.degenerate:
        return c.center
    e1, e2 = _plane_frame(c.plane.normal)
    E1, E2 = e1.dot(e1), e2.dot(e2)
    coeffs = (E1, E2, -c.radius_sq)
    l = math.lcm(*(x.denominator for x in map(_frac, coeffs)))
    form = TernaryForm(*(int(x * l) for x in map(_frac, coeffs)))
    X, Y, Z = legendre_solution(form)
    assert Z != 0, "definite part forces a nonzero third coordinate"
    lam = Fraction(X, Z)
    mu = Fraction(Y, Z)
    p = c.center + e1.scale(lam) + e2.scale(mu)
    assert c.contains(p)
    return p


def embed_isosceles(r: Rational, d: Rational) -> tuple[QPoint3, QPoint3, QPoint3]:
    """Three rational points (b1, b2, apex) realizing the triangle with base
    squared length r and equal legs squared length d.

    The base is a three-rational-squares representation of r from the origin;
    the apex is an exact rational point on the equidistant circle.  Raises
    UnsolvableFormError when the triangle does not embed, ValueError when r
    is not a rational point distance at all.
    """
    r, d = _frac(r), _frac(d)
    if r <= 0 or d <= 0:
        raise ValueError("squared side lengths must be positive")
    rep = three_rational_squares(r)
    if rep is None:
        raise ValueError(f"no segment of squared length {r} exists over the rationals")
    b1 = point(0, 0, 0)
    b2 = point(*rep)
    circle = equidistant_circle(b1, b2, d)
    apex = rational_point_on_circle(circle)
    assert dist_sq(b1, apex) == d and dist_sq(b2, apex) == d and dist_sq(b1, b2) == r
    return b1, b2, apex
