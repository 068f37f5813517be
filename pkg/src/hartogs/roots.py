"""Exact root localization relative to the unit circle, plus float roots.

Everything that claims a count is proven over the rationals:

* ``chebyshev_reduce`` turns a palindromic p of degree 2k into a degree-k
  polynomial g with p(e^(i theta)) * e^(-ik theta) = g(cos theta), via the
  exact Chebyshev recurrence; unit-circle roots of p correspond to roots of
  g in [-1, 1] (interior x doubles into a conjugate pair, x = +-1 maps to
  the single roots s = +-1).
* ``sturm_count`` counts distinct real roots in a half-open interval (a, b]
  by Sturm chains over Fractions (square factors removed by exact GCD).
* ``circle_root_count`` counts unit-circle roots of a palindromic p with
  multiplicity: strip exact roots at s = +-1, Chebyshev-reduce the even
  palindromic remainder, and weight each Yun squarefree factor's Sturm
  count by its multiplicity.
* ``interior_root_count`` produces the full inside/on/outside census.  For
  palindromic p with no circle roots the pairing s <-> 1/s forces
  inside = outside = deg/2.  Otherwise an exact Schur-Cohn/Lehmer count
  runs on rational arithmetic.  Degenerate steps are resolved without
  perturbation, by deflating exact circle roots first: the self-inversive
  factor d = gcd(f, rev f) carries every circle root and every reciprocal
  pair, d is counted by Cohn's derivative rule (a self-inversive d has as
  many roots inside as outside, and that number equals the number of roots
  of d' strictly outside the closed disk), and the cofactor f/d recurses
  classically.  The one remaining degenerate shape (|a0| = |lead|,
  gcd(f, rev f) = 1, hence provably no circle roots) is finished by an
  exact Cayley transform to the half-plane and a Cauchy-index count via
  Sturm chains.

``numeric_roots`` is the float diagnostic: an Aberth-Ehrlich simultaneous
iteration with a relative backward-error residual acceptance test.  Its
inside/on/outside classification (guard band 1e-9) is cross-checked against
the exact census; disagreement raises a warning, never a silent fix.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .errors import (
    ConvergenceFailure,
    InternalMismatch,
    NotPalindromic,
    ValidationError,
    ZeroConstantTerm,
)
from .poly import Scalar, UniPoly

__all__ = [
    "RootCensus",
    "chebyshev_reduce",
    "sturm_count",
    "circle_root_count",
    "interior_root_count",
    "numeric_roots",
    "poly_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "root_residual",
    "classify_float_roots",
]

CIRCLE_GUARD = 1e-9


# ---------------------------------------------------------------------------
# exact gcd / squarefree machinery


def _primitive(p: UniPoly) -> UniPoly:
    """Scale by a positive rational to integer coefficients with content 1.

    Positive scaling preserves signs everywhere, which is what Sturm-chain
    bookkeeping needs.
    """
    if p.is_zero:
        return p
    den = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, abs(c))
    return UniPoly([c // content for c in ints])


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (primitive remainder sequence inside)."""
    a, b = _primitive(a), _primitive(b)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        _, r = a.div_rem(b)
        a, b = b, _primitive(r)
    if a.is_zero:
        return UniPoly()
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero:
        raise ValidationError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return UniPoly([1])
    return p.monic().div_exact(poly_gcd(p, p.derivative()))


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun decomposition: [(g_i, i)] with monic p = prod g_i^i, g_i squarefree."""
    if p.is_zero:
        raise ValidationError("zero polynomial has no squarefree decomposition")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    if g.degree == 0:
        return [(p, 1)]
    out: list[tuple[UniPoly, int]] = []
    c = p.div_exact(g)
    d = dp.div_exact(g) - c.derivative()
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = c.div_exact(a)
        d = d.div_exact(a) - c.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# Sturm chains


def _sturm_chain(p0: UniPoly, p1: UniPoly) -> list[UniPoly]:
    """Negated-remainder chain starting (p0, p1), sign-safe normalization."""
    chain = [_primitive(p0), _primitive(p1)]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        _, r = chain[-2].div_rem(chain[-1])
        if r.is_zero:
            break
        chain.append(_primitive(-r))
    return [q for q in chain if not q.is_zero]

def _sign(x: Scalar) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for prev, cur in zip(signs, signs[1:]) if prev != cur)


def _variations_at(chain: list[UniPoly], x: Scalar) -> int:
    return _variations([_sign(q(Fraction(x))) for q in chain])


def _variations_at_inf(chain: list[UniPoly], direction: int) -> int:
    signs = []
    for q in chain:
        s = _sign(q.leading)
        if direction < 0 and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _open_interval_count(sf: UniPoly, a: Fraction, b: Fraction) -> int:
    """Distinct roots of squarefree sf in the open interval (a, b)."""
    for endpoint in (a, b):
        if sf(endpoint) == 0:
            sf = sf.div_exact(UniPoly([-endpoint, 1]))
    if sf.degree < 1:
        return 0
    chain = _sturm_chain(sf, sf.derivative())
    return _variations_at(chain, a) - _variations_at(chain, b)


def sturm_count(p: UniPoly, a, b) -> int:
    """Distinct real roots of p in (a, b], exact over the rationals.

    Square factors are removed by exact GCD first, so multiplicities do not
    affect the count; the endpoints are handled by explicit evaluation.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValidationError(f"need a < b, got a={a}, b={b}")
    if p.is_zero:
        raise ValidationError("cannot count roots of the zero polynomial")
    if p.degree == 0:
        return 0
    sf = squarefree_part(p)
    return _open_interval_count(sf, a, b) + (1 if sf(b) == 0 else 0)


# ---------------------------------------------------------------------------
# circle counting


def chebyshev_reduce(p: UniPoly) -> UniPoly:
    """Degree-k image g of a palindromic degree-2k polynomial.

    Writing p(e^(i theta)) e^(-ik theta) = c_k + sum_j 2 c_(k+j) cos(j theta)
    and substituting cos(j theta) = T_j(x) yields g with
    p(e^(i theta)) e^(-ik theta) = g(cos theta); algebraically
    p(s) = s^k * g((s + 1/s)/2), so every root pair (r, 1/r) of p lands on
    the single root (r + 1/r)/2 of g, and |s| = 1 corresponds to x in [-1, 1].
    """
    if p.is_zero or not p.is_palindromic():
        raise NotPalindromic("chebyshev_reduce needs a palindromic polynomial")
    if p.degree % 2 != 0:
        raise NotPalindromic("chebyshev_reduce needs even degree")
    k = p.degree // 2
    g = UniPoly([p[k]])
    t_prev, t_cur = UniPoly([1]), UniPoly([0, 1])
    two_x = UniPoly([0, 2])
    for j in range(1, k + 1):
        g = g + t_cur.scale(2 * p[k + j])
        t_prev, t_cur = t_cur, two_x * t_cur - t_prev
    return g


def _circle_count_selfinversive(h: UniPoly) -> int:
    """Unit-circle roots (with multiplicity) of h with rev(h) = +-h.

    Strips exact roots at s = +-1, then counts roots of the Chebyshev image
    of the surviving even palindromic part inside (-1, 1), each weighted by
    its Yun multiplicity and doubled (a conjugate pair per x).
    """
    if h.is_zero:
        raise ValidationError("zero polynomial")
    count = 0
    s_minus_1 = UniPoly([-1, 1])
    s_plus_1 = UniPoly([1, 1])
    while h.degree > 0 and h(1) == 0:
        h = h.div_exact(s_minus_1)
        count += 1
    while h.degree > 0 and h(-1) == 0:
        h = h.div_exact(s_plus_1)
        count += 1
    if h.degree == 0:
        return count
    if not h.is_palindromic():
        raise InternalMismatch("expected a self-inversive factor")
    g = chebyshev_reduce(h)
    weighted = 0
    for factor, mult in squarefree_decomposition(g):
        weighted += mult * _open_interval_count(factor, Fraction(-1), Fraction(1))
    return count + 2 * weighted


def circle_root_count(p: UniPoly) -> int:
    """Roots of a palindromic p on |s| = 1, counted with multiplicity."""
    if p.is_zero or not p.is_palindromic():
        raise NotPalindromic("circle_root_count needs a palindromic polynomial")
    return _circle_count_selfinversive(p)


# ---------------------------------------------------------------------------
# exact open-disk counting (Schur-Cohn with exact degenerate handling)


def _disk_count(f: UniPoly) -> int:
    """Roots of f in |z| < 1 with multiplicity; requires f(0) != 0.

    Classical Schur-Cohn step: with t = a0*f - lead*rev(f) and
    delta = t(0) = a0^2 - lead^2, Rouche on |z| = 1 gives
    inside(f) = inside(t) when delta > 0 and inside(f) = deg - inside(t)
    when delta < 0, valid because f is circle-root-free at that point.
    Circle roots and reciprocal pairs are split off first through
    d = gcd(f, rev f), handled by Cohn's derivative rule.
    """
    n = f.degree
    if n <= 0:
        return 0
    rf = f.reverse()
    d = poly_gcd(f, rf)
    if d.degree > 0:
        return _selfinversive_inside(d) + _disk_count(f.div_exact(d))
    a0, lead = f[0], f.leading
    t = f.scale(a0) - rf.scale(lead)
    if t.is_zero:
        raise InternalMismatch("self-inversive input survived the gcd split")
    delta = t[0]
    if delta > 0:
        return _disk_count(t)
    if delta < 0:
        return n - _disk_count(t)
    return _cayley_disk_count(f)


def _selfinversive_inside(d: UniPoly) -> int:
    """Inside count of a self-inversive d via Cohn's derivative rule.

    d has equally many roots inside and outside, and that number equals the
    number of roots of d' strictly outside the closed unit disk, which is
    the inside count of the reversed derivative.
    """
    dp = d.derivative()
    if dp.is_zero:
        return 0
    v = dp.valuation()
    if v:
        dp = dp.shift_down(v)
    rdp = dp.reverse()
    if rdp.degree < 1:
        return 0
    return _disk_count(rdp)


def _poly_pow(base: UniPoly, e: int) -> UniPoly:
    out = UniPoly([1])
    for _ in range(e):
        out = out * base
    return out


def _cauchy_index(den: UniPoly, num: UniPoly) -> int:
    """Cauchy index of num/den over (-inf, +inf) by a generalized Sturm chain."""
    if num.is_zero:
        return 0
    if num.degree >= den.degree:
        _, num = num.div_rem(den)  # polynomial part contributes no jumps
        if num.is_zero:
            return 0
    chain = _sturm_chain(den, num)
    return _variations_at_inf(chain, -1) - _variations_at_inf(chain, +1)


def _cayley_disk_count(f: UniPoly) -> int:
    """Inside count for the degenerate Schur-Cohn shape, no circle roots.

    Maps the disk to the right half-plane by z = (w-1)/(w+1), so
    F(w) = (w+1)^deg * f((w-1)/(w+1)) has its right-half-plane count r
    equal to the disk count of f.  Writing F(iy) = A(y) + i B(y), the
    argument of F(iy) advances by pi per left-half-plane root and -pi per
    right-half-plane root as y runs over the reals, so the total is
    pi * (n - 2r).  That advance is a Cauchy index, but which one depends
    on whether the y^n term lands in A or in B: for even n the real part A
    dominates at both ends and the advance is -pi * I(B/A), while for odd
    n the imaginary part dominates and the advance is +pi * I(A/B).
    """
    n = f.degree
    w_minus = UniPoly([-1, 1])
    w_plus = UniPoly([1, 1])
    F = UniPoly()
    for k, a in enumerate(f.coeffs):
        if a != 0:
            F = F + (_poly_pow(w_minus, k) * _poly_pow(w_plus, n - k)).scale(a)
    if F.degree != n:
        raise InternalMismatch("Cayley transform dropped degree; f(1) = 0?")
    a_coeffs = [0] * (n + 1)
    b_coeffs = [0] * (n + 1)
    for k in range(n + 1):
        c = F[k]
        if k % 4 == 0:
            a_coeffs[k] = c
        elif k % 4 == 1:
            b_coeffs[k] = c
        elif k % 4 == 2:
            a_coeffs[k] = -c
        else:
            b_coeffs[k] = -c
    A, B = UniPoly(a_coeffs), UniPoly(b_coeffs)
    if A.is_zero or B.is_zero:
        # F(iy) confined to one axis: roots split evenly across half-planes
        if n % 2:
            raise InternalMismatch("axis-symmetric transform with odd degree")
        return n // 2
    if n % 2 == 0:
        doubled = n + _cauchy_index(A, B)
    else:
        doubled = n - _cauchy_index(B, A)
    if doubled % 2:
        raise InternalMismatch("Cauchy index parity mismatch")
    return doubled // 2


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class RootCensus:
    """Exact inside/on/outside counts, plus optional float diagnostics."""

    inside: int
    on_circle: int
    outside: int
    method: str  # "palindromic_pairing" or "schur_cohn"
    float_roots: tuple[complex, ...] | None = None
    float_residuals: tuple[float, ...] | None = None

    @property
    def degree(self) -> int:
        return self.inside + self.on_circle + self.outside


def interior_root_count(
    p: UniPoly, with_floats: bool = False, tol: float = 1e-12
) -> RootCensus:
    """Exact census of the roots of p relative to the unit circle.

    Requires p(0) != 0.  Palindromic p with no circle roots is settled by
    the reciprocal pairing alone; every other case runs the exact
    Schur-Cohn count.  With ``with_floats`` the Aberth-Ehrlich roots are
    attached and their guard-band classification is compared against the
    exact counts (mismatch warns, never silently resolves).
    """
    if p.is_zero or p.degree < 0:
        raise ValidationError("census needs a nonzero polynomial")
    if p[0] == 0:
        raise ZeroConstantTerm("census requires a nonzero constant term")
    n = p.degree
    if p.is_palindromic():
        on = _circle_count_selfinversive(p)
        if on == 0:
            census = RootCensus(n // 2, 0, n // 2, "palindromic_pairing")
        else:
            inside = _disk_count(p)
            census = RootCensus(inside, on, n - on - inside, "schur_cohn")
    else:
        d = poly_gcd(p, p.reverse())
        on = _circle_count_selfinversive(d) if d.degree > 0 else 0
        inside = _disk_count(p)
        census = RootCensus(inside, on, n - on - inside, "schur_cohn")
    if census.inside < 0 or census.outside < 0:
        raise InternalMismatch(f"census went negative: {census}")
    if with_floats and n >= 1:
        roots = numeric_roots(p, tol=tol)
        resid = tuple(root_residual(p, r) for r in roots)
        triple = classify_float_roots(roots)
        if triple != (census.inside, census.on_circle, census.outside):
            warnings.warn(
                f"float classification {triple} disagrees with exact census "
                f"({census.inside}, {census.on_circle}, {census.outside})",
                RuntimeWarning,
                stacklevel=2,
            )
        census = replace(
            census, float_roots=tuple(roots), float_residuals=resid
        )
    return census


# ---------------------------------------------------------------------------
# float diagnostics


def root_residual(p: UniPoly, r: complex) -> float:
    """Relative backward-error residual |p(r)| / sum_i |c_i| |r|^i."""
    scale = 0.0
    mag = 1.0
    ar = abs(r)
    for c in p.coeffs:
        scale += abs(float(c)) * mag
        mag *= ar
    return abs(p(complex(r))) / scale if scale else 0.0


def classify_float_roots(
    roots, guard: float = CIRCLE_GUARD
) -> tuple[int, int, int]:
    """(inside, on, outside) counts of float roots with a guard band."""
    inside = on = outside = 0
    for r in roots:
        a = abs(r)
        if a < 1.0 - guard:
            inside += 1
        elif a <= 1.0 + guard:
            on += 1
        else:
            outside += 1
    return inside, on, outside


def numeric_roots(
    p: UniPoly, tol: float = 1e-12, max_iter: int = 500
) -> list[complex]:
    """All complex roots by Aberth-Ehrlich simultaneous iteration.

    Converged when every root satisfies the relative backward-error
    residual |p(r)| / sum |c_i||r|^i <= tol; raises ConvergenceFailure if
    the budget runs out first.  Roots come back sorted by (real, imag).
    """
    if p.degree < 1:
        raise ValidationError("need degree >= 1 to compute roots")
    v = p.valuation()
    found: list[complex] = [0j] * v
    q = p.shift_down(v) if v else p
    n = q.degree
    if n == 0:
        return found
    coeffs = np.array([float(c) for c in q.coeffs], dtype=np.float64)
    coeffs /= np.max(np.abs(coeffs))
    dcoeffs = coeffs[1:] * np.arange(1, n + 1)
    abs_coeffs = np.abs(coeffs)

    radius = (abs(coeffs[0]) / abs(coeffs[-1])) ** (1.0 / n)
    angles = 2.0 * math.pi * np.arange(n) / n + 0.4
    z = radius * np.exp(1j * angles)

    def horner(cs: np.ndarray, x: np.ndarray) -> np.ndarray:
        acc = np.full_like(x, cs[-1], dtype=complex)
        for c in cs[-2::-1]:
            acc = acc * x + c
        return acc

    for _ in range(max_iter):
        pv = horner(coeffs, z)
        scale = horner(abs_coeffs.astype(complex), np.abs(z).astype(complex)).real
        if np.all(np.abs(pv) <= tol * scale):
            roots = found + sorted(
                (complex(r) for r in z), key=lambda r: (r.real, r.imag)
            )
            return roots
        dv = horner(dcoeffs, z)
        dv = np.where(dv == 0, 1e-300, dv)
        w = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - w * s
        denom = np.where(denom == 0, 1e-300, denom)
        z = z - w / denom
    raise ConvergenceFailure(
        f"Aberth-Ehrlich did not reach residual {tol} in {max_iter} sweeps"
    )
