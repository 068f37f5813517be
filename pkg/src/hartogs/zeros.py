"""Explicit kernel-zero witnesses and the non-vanishing conjecture scanner.

A diagonal polynomial root s0 with |s0| < 1 lifts to a concrete pair of
interior points at which the kernel vanishes:

    z = (sqrt(|s0|) e^(i arg s0), sqrt(|s0|) e^(i arg s0)),
    w = (sqrt(|s0|), sqrt(|s0|)),

so that z1*conj(w1) = z2*conj(w2) = s0 and K(z, w) is a nonzero multiple
of s0^(2n-1) Q(s0) = 0.  Which interior root is used is a free choice;
candidates are ordered deterministically and selected by index.

The scanner walks every coprime pair with m <= m_max and records the exact
circle and interior root counts of Q.  The conjecture under scan: Q never
vanishes on |s| = 1, hence has exactly k = m - n roots inside the disk.
A violation is a finding, not an error; it is flagged in the row and the
scan keeps going.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .arith import CoprimePair
from .domain import interior_margin
from .errors import InternalMismatch, NoInteriorRoot, ValidationError
from .kernel import kernel_formula
from .poly import UniPoly
from .qpoly import diagonal_poly
from .roots import (
    CIRCLE_GUARD,
    interior_root_count,
    numeric_roots,
    squarefree_part,
)

__all__ = [
    "ZeroWitness",
    "zero_witness",
    "witness_candidates",
    "ScanRow",
    "scan",
    "coprime_pairs",
    "rows_to_csv",
    "rows_to_json",
    "CSV_HEADER",
]

Point = tuple[complex, complex]

_PSI_TOL = 1e-14
_MARGIN_FLOOR = 1e-6


@dataclass(frozen=True)
class ZeroWitness:
    """A concrete interior pair (z, w) with K(z, w) numerically zero."""

    pair: CoprimePair
    s0: complex
    z: Point
    w: Point
    kernel_value: complex
    residual: float
    margin: float

    def to_json_dict(self) -> dict:
        return {
            "m": self.pair.m,
            "n": self.pair.n,
            "s0": [self.s0.real, self.s0.imag],
            "z": [[c.real, c.imag] for c in self.z],
            "w": [[c.real, c.imag] for c in self.w],
            "kernel_value": [self.kernel_value.real, self.kernel_value.imag],
            "residual": self.residual,
            "margin": self.margin,
        }


def _refine_real_root(sf: UniPoly, approx: float) -> float:
    """Exact-sign bisection around a float approximation of a simple root."""
    width = Fraction(1, 10**6)
    lo = Fraction(approx) - width
    hi = Fraction(approx) + width
    flo, fhi = sf(lo), sf(hi)
    attempts = 0
    while (flo > 0) == (fhi > 0):
        width *= 4
        lo, hi = Fraction(approx) - width, Fraction(approx) + width
        flo, fhi = sf(lo), sf(hi)
        attempts += 1
        if attempts > 8:
            return approx  # no bracket; keep the float root as-is
    if flo == 0:
        return float(lo)
    if fhi == 0:
        return float(hi)
    for _ in range(80):
        mid = (lo + hi) / 2
        fmid = sf(mid)
        if fmid == 0:
            return float(mid)
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return float((lo + hi) / 2)


def _refine_complex_root(sf: UniPoly, approx: complex) -> complex:
    """Newton polish in double precision at a simple root."""
    dsf = sf.derivative()
    z = complex(approx)
    for _ in range(60):
        fz = sf(z)
        dz = dsf(z)
        if dz == 0:
            break
        step = fz / dz
        z -= step
        if abs(step) < 1e-17 * max(1.0, abs(z)):
            break
    return z


def witness_candidates(pair: CoprimePair) -> list[complex]:
    """Interior roots of Q (distinct, refined), deterministically ordered.

    Refinement runs on the exact squarefree part of Q: interior roots can
    have even multiplicity (Q for (5,3) is 5(s^2+3s+1)^2), where plain
    bisection on Q itself would find no sign change.
    """
    q = diagonal_poly(pair).poly
    census = interior_root_count(q)
    if census.inside == 0:
        raise NoInteriorRoot(f"Q for {pair} has no root inside the unit disk")
    sf = squarefree_part(q)
    interior = [r for r in numeric_roots(sf, tol=1e-12) if abs(r) < 1.0 - CIRCLE_GUARD]
    if not interior:
        raise InternalMismatch(
            f"census reports interior roots for {pair} but the float finder found none"
        )
    refined = []
    for r in interior:
        if abs(r.imag) < 1e-12:
            refined.append(complex(_refine_real_root(sf, r.real)))
        else:
            refined.append(_refine_complex_root(sf, r))
    return sorted(refined, key=lambda r: (r.real, r.imag))


def _unit_phase(s0: complex) -> complex:
    """Unit complex number e^(i arg s0)."""
    a = abs(s0)
    if a == 0:
        return 1 + 0j
    return s0 / a


def zero_witness(pair: CoprimePair, which: int = 0) -> ZeroWitness:
    """Build the kernel-zero witness for the chosen interior root of Q."""
    candidates = witness_candidates(pair)
    if not 0 <= which < len(candidates):
        raise ValidationError(
            f"root index {which} out of range; {len(candidates)} candidates"
        )
    s0 = candidates[which]
    r = math.sqrt(abs(s0))
    phase = _unit_phase(s0)
    z = (r * phase, r * phase)
    w = (complex(r), complex(r))
    psi = (z[0] * w[0].conjugate(), z[1] * w[1].conjugate())
    for value in psi:
        if abs(value - s0) > _PSI_TOL * max(1.0, abs(s0)):
            raise InternalMismatch(
                f"witness construction drifted: psi gave {value}, expected {s0}"
            )
    margin = min(interior_margin(pair, z), interior_margin(pair, w))
    if margin < _MARGIN_FLOOR:
        raise InternalMismatch(f"witness for {pair} is too close to the boundary")
    kval = kernel_formula(pair).eval(z, w)
    return ZeroWitness(pair, s0, z, w, kval, abs(kval), margin)


# ---------------------------------------------------------------------------
# conjecture scan

CSV_HEADER = "m,n,k,degree,circle_count,interior_count,conjecture_holds,elapsed_ms"


@dataclass(frozen=True)
class ScanRow:
    """One coprime pair's exact census and verdict."""

    m: int
    n: int
    k: int
    degree: int
    circle_count: int
    interior_count: int
    conjecture_holds: bool
    elapsed_ms: float
    error: str | None = None

    def csv_line(self, include_timing: bool = True) -> str:
        fields = [
            str(self.m),
            str(self.n),
            str(self.k),
            str(self.degree),
            str(self.circle_count),
            str(self.interior_count),
            "true" if self.conjecture_holds else "false",
        ]
        if include_timing:
            fields.append(f"{self.elapsed_ms:.3f}")
        return ",".join(fields)

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "degree": self.degree,
            "circle_count": self.circle_count,
            "interior_count": self.interior_count,
            "conjecture_holds": self.conjecture_holds,
        }
        if include_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        if self.error is not None:
            out["error"] = self.error
        return out


def coprime_pairs(m_max: int, k: int | None = None) -> list[CoprimePair]:
    """All valid pairs with m <= m_max, ordered by (m, n); optional k filter."""
    if m_max < 2:
        raise ValidationError("m_max must be at least 2")
    out = []
    for m in range(2, m_max + 1):
        for n in range(1, m):
            if math.gcd(m, n) == 1 and (k is None or m - n == k):
                out.append(CoprimePair(m, n))
    return out


def _scan_pair(pair: CoprimePair) -> ScanRow:
    start = time.perf_counter()
    try:
        q = diagonal_poly(pair).poly
        census = interior_root_count(q)
        elapsed = (time.perf_counter() - start) * 1000.0
        holds = census.on_circle == 0 and census.inside == pair.k
        return ScanRow(
            pair.m,
            pair.n,
            pair.k,
            q.degree,
            census.on_circle,
            census.inside,
            holds,
            elapsed,
        )
    except Exception as exc:  # pragma: no cover - per-pair failure marker
        elapsed = (time.perf_counter() - start) * 1000.0
        return ScanRow(
            pair.m, pair.n, pair.k, -1, -1, -1, False, elapsed,
            error=f"{type(exc).__name__}: {exc}",
        )


def scan(
    m_max: int, k: int | None = None, workers: int | None = None
) -> list[ScanRow]:
    """Census every coprime pair with m <= m_max; rows ordered by (m, n).

    The row order and all mathematical columns are identical regardless of
    worker count; only elapsed_ms varies run to run.
    """
    pairs = coprime_pairs(m_max, k)
    if workers is None or workers <= 1:
        rows = [_scan_pair(pair) for pair in pairs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_pair, pairs, chunksize=8))
    return sorted(rows, key=lambda row: (row.m, row.n))


def rows_to_csv(rows: list[ScanRow], include_timing: bool = True) -> str:
    header = CSV_HEADER if include_timing else CSV_HEADER.rsplit(",", 1)[0]
    lines = [header]
    lines.extend(row.csv_line(include_timing) for row in rows)
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[ScanRow], include_timing: bool = True) -> str:
    return json.dumps(
        [row.to_json_dict(include_timing) for row in rows], indent=2
    ) + "\n"
