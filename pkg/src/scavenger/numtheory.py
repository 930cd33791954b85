"""Diophantine decision procedures and constructive same-color chain certificates.

Covers: membership in the open-case distance set T, quadratic residues,
Legendre's solvability criterion for ternary forms (with a Holzer-bounded
constructive search), sums of three squares, the additive-closure criteria
for step sets, and embeddability tests for isosceles triangles in Q^3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qcore import QVec3, _frac, factorize, norm_sq, squarefree_part, vec


class UnsolvableFormError(ValueError):
    """Raised when a constructive solution is requested for an unsolvable form."""


def in_T(t: int) -> bool:
    """Membership in the open-case distance set: square-free, even, with an
    odd prime factor congruent to 2 mod 3."""
    if t < 1:
        return False
    factors = factorize(t)
    if any(e > 1 for e in factors.values()):
        return False
    if 2 not in factors:
        return False
    return any(p % 3 == 2 for p in factors if p != 2)


# --- quadratic residues ------------------------------------------------------


def _qr_prime_power(a: int, p: int, e: int) -> bool:
    mod = p**e
    a %= mod
    if a == 0:
        return True
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    if v % 2 == 1:
        return False
    k = e - v
    if p == 2:
        if k == 1:
            return True
        if k == 2:
            return a % 4 == 1
        return a % 8 == 1
    return pow(a, (p - 1) // 2, p) == 1


def is_quadratic_residue(a: int, m: int) -> bool:
    """Whether x^2 = a (mod m) has a solution."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return True
    return all(_qr_prime_power(a, p, e) for p, e in factorize(m).items())


# --- Legendre's theorem on ax^2 + by^2 + cz^2 = 0 ---------------------------


@dataclass(frozen=True)
class TernaryForm:
    """Diagonal ternary quadratic form a*x^2 + b*y^2 + c*z^2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0 or self.c == 0:
            raise ValueError(f"zero coefficient in ternary form {(self.a, self.b, self.c)}")

    def value(self, x: int, y: int, z: int) -> int:
        return self.a * x * x + self.b * y * y + self.c * z * z

    def coeffs(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _square_part(n: int) -> int:
    """Largest k with k^2 dividing |n|."""
    n = abs(n)
    k = 1
    for p, e in factorize(n).items():
        k *= p ** (e // 2)
    return k


def normalize_form(form: TernaryForm) -> tuple[tuple[int, int, int], list[tuple]]:
    """Reduce to an equivalent form with square-free, pairwise-coprime
    coefficients.  Returns the reduced coefficients plus the transform log
    needed to pull solutions back to the original form.

    Log entries: ("common", g) coefficients divided by g (solutions unchanged);
    ("square", i, k) k^2 stripped from coefficient i (multiply the other two
    solution coordinates by k); ("pair", i, j, k, g) gcd g moved from
    coefficients i,j onto k (multiply solution coordinate k by g).
    """
    c = list(form.coeffs())
    log: list[tuple] = []
    g = math.gcd(math.gcd(abs(c[0]), abs(c[1])), abs(c[2]))
    if g > 1:
        c = [x // g for x in c]
        log.append(("common", g))
    while True:
        for i in range(3):
            k = _square_part(c[i])
            if k > 1:
                c[i] //= k * k
                log.append(("square", i, k))
        for i, j in ((0, 1), (0, 2), (1, 2)):
            g = math.gcd(abs(c[i]), abs(c[j]))
            if g > 1:
                k = 3 - i - j
                c[i] //= g
                c[j] //= g
                c[k] *= g
                log.append(("pair", i, j, k, g))
                break
        else:
            return (c[0], c[1], c[2]), log


def legendre_solvable(form: TernaryForm) -> bool:
    """Exact decision for nontrivial integer solvability of a*x^2+b*y^2+c*z^2 = 0."""
    (a, b, c), _ = normalize_form(form)
    if a > 0 and b > 0 and c > 0:
        return False
    if a < 0 and b < 0 and c < 0:
        return False
    return (
        is_quadratic_residue(-a * b, abs(c))
        and is_quadratic_residue(-a * c, abs(b))
        and is_quadratic_residue(-b * c, abs(a))
    )


def _holzer_search(a: int, b: int, c: int) -> tuple[int, int, int] | None:
    """Exhaustive search within the Holzer bounds |x| <= sqrt|bc| etc.

    Complete for normalized forms: a solvable form has a solution inside
    these bounds, so exhausting them decides solvability.
    """
    coeffs = (a, b, c)
    bounds = (
        math.isqrt(abs(b * c)),
        math.isqrt(abs(a * c)),
        math.isqrt(abs(a * b)),
    )
    # solve for the coordinate with the largest bound, scan the other two
    solve_idx = min(range(3), key=lambda i: (abs(coeffs[i]), i))
    scan = [i for i in range(3) if i != solve_idx]
    ca, cb = coeffs[scan[0]], coeffs[scan[1]]
    cs = coeffs[solve_idx]
    for u in range(bounds[scan[0]] + 1):
        for w in range(bounds[scan[1]] + 1):
            rhs = -(ca * u * u + cb * w * w)
            if rhs % cs != 0:
                continue
            s2 = rhs // cs
            if s2 < 0:
                continue
            s = math.isqrt(s2)
            if s * s != s2 and s2 != 0:
                continue
            if u == 0 and w == 0 and s2 == 0:
                continue
            out = [0, 0, 0]
            out[scan[0]], out[scan[1]], out[solve_idx] = u, w, s
            return (out[0], out[1], out[2])
    return None


def legendre_solution(form: TernaryForm) -> tuple[int, int, int]:
    """A primitive nontrivial solution of the form, found by Holzer-bounded
    exhaustive search on the normalized form and pulled back exactly."""
    (a, b, c), log = normalize_form(form)
    if (a > 0 and b > 0 and c > 0) or (a < 0 and b < 0 and c < 0):
        raise UnsolvableFormError(f"definite form {form.coeffs()} has only the trivial zero")
    sol = _holzer_search(a, b, c)
    if sol is None:
        raise UnsolvableFormError(f"form {form.coeffs()} fails Legendre's criterion")
    x, y, z = sol
    for entry in reversed(log):
        if entry[0] == "square":
            _, i, k = entry
            coords = [x, y, z]
            for j in range(3):
                if j != i:
                    coords[j] *= k
            x, y, z = coords
        elif entry[0] == "pair":
            _, _, _, k, g = entry
            coords = [x, y, z]
            coords[k] *= g
            x, y, z = coords
    g = math.gcd(math.gcd(abs(x), abs(y)), abs(z))
    if g > 1:
        x, y, z = x // g, y // g, z // g
    assert form.value(x, y, z) == 0, "pullback must preserve the zero"
    return (x, y, z)


# --- sums of three squares ---------------------------------------------------


@lru_cache(maxsize=None)
def three_squares(n: int) -> tuple[int, int, int] | None:
    """Lexicographically largest primitive triple a >= b >= c >= 0 with
    a^2+b^2+c^2 = n, or None when no primitive representation exists."""
    if n < 1:
        raise ValueError(f"three_squares expects n >= 1, got {n}")
    for a in range(math.isqrt(n), -1, -1):
        rem = n - a * a
        if rem > 2 * a * a:
            break
        for b in range(min(a, math.isqrt(rem)), -1, -1):
            c2 = rem - b * b
            if c2 > b * b:
                break
            c = math.isqrt(c2)
            if c * c == c2 and math.gcd(math.gcd(a, b), c) == 1:
                return (a, b, c)
    return None


def three_rational_squares(q: Fraction) -> tuple[Fraction, Fraction, Fraction] | None:
    """Canonical a >= b >= c >= 0 in Q with a^2+b^2+c^2 = q, or None."""
    q = _frac(q)
    if q <= 0:
        raise ValueError(f"expected positive rational, got {q}")
    m, n = q.numerator, q.denominator
    prod = m * n
    alpha = 0
    while prod % 4 == 0:
        prod //= 4
        alpha += 1
    rep = three_squares(prod)
    if rep is None:
        # stripped of 4s, only residue 7 mod 8 remains unrepresentable
        return None
    scale = Fraction(2**alpha, n)
    return tuple(x * scale for x in rep)  # type: ignore[return-value]


# --- step-set additive closure criteria and chain construction ---------------


def phi_criteria(h: Fraction) -> bool:
    """Sufficient test that every vector of admissible squared length t is a
    finite sum of vectors of squared length h = m/n (lowest terms): m = 2
    (mod 4), or the square-free part n0 of n is even, or n0 is odd with
    m*n0 = 1 (mod 4)."""
    h = _frac(h)
    if h <= 0:
        raise ValueError(f"squared length must be positive, got {h}")
    m, n = h.numerator, h.denominator
    if m % 4 == 2:
        return True
    n0 = squarefree_part(n)
    if n0 % 2 == 0:
        return True
    return (m * n0) % 4 == 1


def antipodal_dist_sq(radius_sq: Fraction) -> Fraction:
    """Squared distance between antipodal points of a circle of squared
    radius m/n with n = 2 (mod 4), returned as 2m/(n/2)."""
    radius_sq = _frac(radius_sq)
    if radius_sq <= 0:
        raise ValueError(f"squared radius must be positive, got {radius_sq}")
    if radius_sq.denominator % 4 != 2:
        raise ValueError(
            f"denominator of {radius_sq} is not 2 mod 4; antipodal device does not apply"
        )
    return Fraction(2 * radius_sq.numerator, radius_sq.denominator // 2)


@dataclass(frozen=True)
class ChainCertificate:
    """A finite walk of exact steps, all of one squared length, from the
    origin to `target`."""

    target: QVec3
    step_norm_sq: Fraction
    steps: tuple[QVec3, ...]

    def validate(self) -> None:
        total = vec(0, 0, 0)
        for i, s in enumerate(self.steps):
            if norm_sq(s) != self.step_norm_sq:
                raise AssertionError(f"step {i} has squared length {norm_sq(s)}")
            total = total + s
        if total != self.target:
            raise AssertionError(f"chain sums to {total}, not {self.target}")


def _balanced_div(x: int, m: int) -> int:
    # quotient q with x - q*m in [-m/2, m/2)
    return (x + m // 2) // m


def _solve_linear3(g: int, a: int, b: int, c: int) -> tuple[int, int, int]:
    """Small integers (d1,d2,d3) with d1*a + d2*b + d3*c = g, for
    a >= b >= c >= 0, gcd(a,b,c) = 1, a > 0."""
    if b == 0 and c == 0:
        return (g, 0, 0)
    if c == 0:
        s, t = _ext_gcd(a, b)
        d1, d2 = s * g, t * g
        q = _balanced_div(d2, a)
        d2 -= q * a
        d1 += q * b
        assert d1 * a + d2 * b == g
        return (d1, d2, 0)
    g3 = math.gcd(b, c)
    s, t = _ext_gcd(b // g3, c // g3)
    p, q = _ext_gcd(a, g3)
    # g = (p*g)*a + (q*g)*(s*(b/g3) + t*(c/g3))*g3
    d1 = p * g
    d2 = q * g * s
    d3 = q * g * t
    step = b // g3
    r = _balanced_div(d3, step)
    d3 -= r * step
    d2 += r * (c // g3)
    gab = math.gcd(a, b)
    step = a // gab
    r = _balanced_div(d2, step)
    d2 -= r * step
    d1 += r * (b // gab)
    assert d1 * a + d2 * b + d3 * c == g
    return (d1, d2, d3)


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    """(s, t) with s*a + t*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def _place(axis: int, value: int, others: tuple[int, int], signs: tuple[int, int]) -> tuple[int, int, int]:
    out = [0, 0, 0]
    out[axis] = value
    rest = [i for i in range(3) if i != axis]
    out[rest[0]] = signs[0] * others[0]
    out[rest[1]] = signs[1] * others[1]
    return (out[0], out[1], out[2])


def _atom_moves_for_axis(axis: int, count: int, comp_idx: int, rep: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    """`abs(count)` cancelling pairs, each summing to sign(count)*2*rep[comp_idx]
    along `axis`."""
    moves: list[tuple[int, int, int]] = []
    others = tuple(rep[i] for i in range(3) if i != comp_idx)
    sign = 1 if count > 0 else -1
    for _ in range(abs(count)):
        first = _place(axis, sign * rep[comp_idx], others, (1, 1))
        second = _place(axis, sign * rep[comp_idx], others, (-1, -1))
        moves.append(first)
        moves.append(second)
    return moves


def _even_moves(w: tuple[int, int, int], rep: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    """Atom moves summing exactly to the all-even integer vector w."""
    moves: list[tuple[int, int, int]] = []
    a, b, c = rep
    for axis in range(3):
        if w[axis] == 0:
            continue
        assert w[axis] % 2 == 0
        d = _solve_linear3(w[axis] // 2, a, b, c)
        for comp_idx, count in enumerate(d):
            if count != 0 and rep[comp_idx] != 0:
                moves.extend(_atom_moves_for_axis(axis, count, comp_idx, rep))
            elif count != 0 and rep[comp_idx] == 0:
                raise AssertionError("solver assigned weight to a zero component")
    return moves


def _parity_permutation(rep: tuple[int, int, int], target_parity: tuple[int, int, int]) -> tuple[int, ...]:
    """First permutation sigma (lexicographic) with rep[sigma[i]] = target_parity[i] mod 2."""
    import itertools

    for sigma in itertools.permutations(range(3)):
        if all(rep[sigma[i]] % 2 == target_parity[i] for i in range(3)):
            return sigma
    raise AssertionError("no parity-aligning permutation exists")


def construct_chain(v: QVec3, h: Fraction) -> ChainCertificate:
    """Constructive witness that v (of admissible squared length) is a finite
    sum of vectors of squared length h, when `phi_criteria(h)` holds.

    Follows the constructive closure proof: a primitive three-squares
    representation of the relevant product supplies the step direction, sign
    and permutation closure plus the doubling trick yield axis moves of even
    integers, and Bezout combinations assemble the target.  Rational targets
    with odd denominator d are built by scaling the integer construction for
    d*v with step length h*d^2, which satisfies the same criteria bullet.
    """
    h = _frac(h)
    t = norm_sq(v)
    if t.denominator != 1 or not in_T(t.numerator):
        raise ValueError(f"target squared length {t} is not in the open-case set")
    if not phi_criteria(h):
        raise ValueError(f"criteria fail for step squared length {h}; no chain is promised")
    if t == h:
        cert = ChainCertificate(v, h, (v,))
        cert.validate()
        return cert

    d = math.lcm(v.dx.denominator, v.dy.denominator, v.dz.denominator)
    u = (int(v.dx * d), int(v.dy * d), int(v.dz * d))
    scaled = h * d * d
    m, n = scaled.numerator, scaled.denominator
    alpha = 0
    while n % 4 == 0:
        n //= 4
        alpha += 1
    # n now has 2-adic valuation 0 or 1; product parity decides the assembly
    product = m * n
    k = scaled.denominator // (2**alpha)
    rep = three_squares(product)
    assert rep is not None, "criteria guarantee a primitive representation"

    u_parity = tuple(x % 2 for x in u)
    atom_moves: list[tuple[int, int, int]] = []
    if product % 4 == 2:
        sigma = _parity_permutation(rep, u_parity)  # type: ignore[arg-type]
        base = tuple(rep[sigma[i]] for i in range(3))
        atom_moves.append(base)
        rest = tuple(u[i] - base[i] for i in range(3))
        atom_moves.extend(_even_moves(rest, rep))  # type: ignore[arg-type]
    else:
        odd_axes = [i for i in range(3) if u[i] % 2 == 1]
        assert len(odd_axes) == 2, "admissible targets have exactly two odd entries"
        reached = [0, 0, 0]
        for axis in odd_axes:
            unit_parity = tuple(1 if i == axis else 0 for i in range(3))
            sigma = _parity_permutation(rep, unit_parity)  # type: ignore[arg-type]
            base = tuple(rep[sigma[i]] for i in range(3))
            atom_moves.append(base)
            correction = tuple((1 if i == axis else 0) - base[i] for i in range(3))
            atom_moves.extend(_even_moves(correction, rep))  # type: ignore[arg-type]
            reached[axis] = 1
        rest = tuple(u[i] - reached[i] for i in range(3))
        atom_moves.extend(_even_moves(rest, rep))  # type: ignore[arg-type]

    denom = k * d
    steps: list[QVec3] = []
    for w in atom_moves:
        micro = QVec3(Fraction(w[0], denom), Fraction(w[1], denom), Fraction(w[2], denom))
        steps.extend([micro] * k)
    cert = ChainCertificate(v, h, tuple(steps))
    cert.validate()
    return cert


# --- isosceles embeddability and the equation pair ---------------------------


def _clear_denominators(coeffs: tuple[Fraction, Fraction, Fraction]) -> TernaryForm:
    l = math.lcm(*(c.denominator for c in coeffs))
    return TernaryForm(*(int(c * l) for c in coeffs))


def isosceles_embeddable(r: Fraction, d: Fraction, rep: tuple[Fraction, Fraction, Fraction] | None = None) -> bool:
    """Whether a triangle with side lengths sqrt(r), sqrt(d), sqrt(d) embeds
    in Q^3: equivalent to nontrivial solvability of
    x^2 + r*y^2 - (4d - r)(a^2 + b^2) z^2 = 0 for any representation
    r = a^2 + b^2 + c^2 with a, b not both zero."""
    r, d = _frac(r), _frac(d)
    if r <= 0 or d <= 0:
        raise ValueError("side squared lengths must be positive")
    if rep is None:
        rep = three_rational_squares(r)
        if rep is None:
            return False  # no segment of squared length r exists at all
    a, b, c = rep
    if a * a + b * b + c * c != r:
        raise ValueError(f"{rep} does not represent {r}")
    if a == 0 and b == 0:
        raise ValueError("representation must have a, b not both zero")
    if three_rational_squares(d) is None:
        return False
    if 4 * d - r <= 0:
        return False
    form = _clear_denominators((Fraction(1), r, -(4 * d - r) * (a * a + b * b)))
    return legendre_solvable(form)


def eq_pair_feasible(t: int, d: Fraction) -> bool:
    """Whether both isosceles triangles T(sqrt t, sqrt d, sqrt d) and
    T(sqrt d, sqrt t, sqrt t) embed in Q^3, via the paired ternary forms."""
    if not in_T(t):
        raise ValueError(f"t={t} is not in the open-case set")
    d = _frac(d)
    if d <= 0:
        return False
    if 4 * d - t <= 0 or 4 * Fraction(t) - d <= 0:
        return False
    if three_rational_squares(d) is None:
        return False
    return isosceles_embeddable(Fraction(t), d) and isosceles_embeddable(d, Fraction(t))
