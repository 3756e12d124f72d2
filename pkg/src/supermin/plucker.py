"""Invariants of the osculating curves: ramification, degrees, areas.

For a linearly full polynomial curve in C^7 the stages of ``wedge_table``
are the homogeneous coordinates of its osculating curves.  This module
extracts their vanishing orders (singularity types), computes the degrees
three independent ways (exact support, the ramification formula, numerical
curvature integrals), checks the degree/ramification recurrence, and turns
degrees into areas.

Index conventions used throughout: degrees delta_0..delta_5 are 0-based
(delta_p is the degree of the p-th osculating curve, with the boundary
values delta_{-1} = delta_6 = 0); ramification totals T_1..T_6 are 1-based
(T_j belongs to the (j-1)-st osculating curve), stored as 6-tuples indexed
T[j-1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .harmonic import HarmonicSequence, derivative_tower, wedge_table
from .poly import Poly, poly_gcd

_DIM = 7


def wedge_curves(curve) -> tuple:
    """Stages 0..6 of the osculating minors of the curve.

    Stage p maps each (p+1)-subset of component indices to a Poly; stage 6
    is the single full determinant, whose vanishing would mean the curve is
    not linearly full (raised as an error naming the failing stage).
    """
    tower = derivative_tower(curve, _DIM - 1)
    stages = wedge_table(tower)
    if all(q.is_zero() for q in stages[_DIM - 1].values()):
        for p, stage in enumerate(stages):
            if all(q.is_zero() for q in stage.values()):
                raise ValueError(
                    "curve is not linearly full: every osculating minor of "
                    f"stage {p} vanishes identically"
                )
    return tuple(stages)


def _stage_ord(stage) -> int:
    vals = [q.ord() for q in stage.values() if q]
    return min(vals)


def _stage_deg(stage) -> int:
    vals = [q.degree() for q in stage.values() if q]
    return max(vals)


def _reversed_curve(curve) -> tuple[Poly, ...]:
    total = max(c.degree() for c in curve)
    return tuple(c.reverse(total) for c in curve)


def singularity_type(curve, at=0) -> tuple[int, ...]:
    """Ramification indices (r_1..r_6) of the osculating chain at a point.

    ``at`` is 0 or "inf" (math.inf also accepted); the infinite point is
    handled by the exact substitution z -> 1/z with cleared denominators.
    With s_j the vanishing order of stage j at the point and s_{-1} = 0,
    the j-th index is the second difference s_{j+1} - 2 s_j + s_{j-1}.
    """
    if at == 0:
        stages = wedge_curves(curve)
    elif at in ("inf", math.inf):
        stages = wedge_curves(_reversed_curve(curve))
    else:
        raise ValueError("singularity_type evaluates at 0 or 'inf' only")
    s = [0] + [_stage_ord(stage) for stage in stages]
    out = tuple(s[j + 2] - 2 * s[j + 1] + s[j] for j in range(6))
    if any(r < 0 for r in out):
        raise ValueError(f"negative ramification index from orders {s[1:]}")
    return out


def degrees_exact(curve) -> tuple[int, ...]:
    """Degrees of osculating curves 0..5 from the minors' exact support.

    The degree is the top exponent minus the vanishing order at 0, which is
    the correct projective degree when the minors share no zero away from
    the origin; a shared interior zero is detected through the component
    gcd and reported, since it would mean ramification at a third point.
    """
    stages = wedge_curves(curve)
    out = []
    for p in range(6):
        stage = stages[p]
        common = Poly()
        for q in stage.values():
            if q:
                common = poly_gcd(common, q) if common else q
            if common.degree() == 0:
                break
        if common.degree() != common.ord():
            raise ValueError(
                f"unexpected interior singularity: stage-{p} osculating minors "
                "share a zero away from the origin"
            )
        out.append(_stage_deg(stage) - _stage_ord(stage))
    return tuple(out)


def degrees_formula(totals) -> tuple[int, ...]:
    """Degrees 0..5 from the ramification totals alone.

    delta_p = (p+1)(6-p) + (6-p)/7 * sum_{k<p} (k+1) T[k]
                         + (p+1)/7 * sum_{k>=p} (6-k) T[k].
    """
    T = tuple(totals)
    if len(T) != 6:
        raise ValueError("expected six ramification totals")
    out = []
    for p in range(6):
        val = Fraction((p + 1) * (6 - p))
        val += Fraction(6 - p, 7) * sum((k + 1) * T[k] for k in range(p))
        val += Fraction(p + 1, 7) * sum((6 - k) * T[k] for k in range(p, 6))
        if val.denominator != 1:
            raise ValueError(f"ramification totals {T} give non-integer degree {val}")
        out.append(int(val))
    return tuple(out)


def degrees_numeric(
    seq: HarmonicSequence,
    p: int,
    *,
    rel_tol: float = 0.01,
    start_nodes: int = 48,
    max_nodes: int = 768,
) -> float:
    """The p-th degree as (1/pi) times the integral of the curvature density.

    The density a_{p+1}/a_p is integrated over the sphere in two charts:
    the unit disc directly, and the unit disc of the substituted coordinate
    w = 1/z using the reversed curve's own chain (the density transforms
    with the Jacobian exactly, because reversal is a coordinate change plus
    a gauge factor).  Radial Gauss-Legendre times a uniform angular grid,
    with node doubling until two successive estimates agree.
    """
    if not 0 <= p <= 5:
        raise ValueError("degree index must lie in 0..5")
    gammas = (seq.norm_ratios[p], seq.reversed_sequence().norm_ratios[p])

    def estimate(n: int) -> float:
        x, w = np.polynomial.legendre.leggauss(n)
        r = 0.5 * (x + 1.0)
        wr = 0.5 * w
        m = 2 * n
        theta = np.linspace(0.0, 2.0 * np.pi, m, endpoint=False)
        z = r[:, None] * np.exp(1j * theta)[None, :]
        total = 0.0
        for gamma in gammas:
            vals = gamma(z).real
            total += float((wr * r) @ vals.sum(axis=1)) * (2.0 * np.pi / m)
        return total / np.pi

    prev = estimate(start_nodes)
    n = start_nodes
    while n < max_nodes:
        n *= 2
        cur = estimate(n)
        if abs(cur - prev) <= 0.25 * rel_tol * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise RuntimeError(f"quadrature did not converge; achieved estimate {prev:.6f}")


# --------------------------------------------------------------------- report


@dataclass(frozen=True)
class SingularityReport:
    """Everything the degree/area bookkeeping of one curve produces."""

    type_at_zero: tuple[int, ...]
    type_at_infinity: tuple[int, ...]
    totals: tuple[int, ...]
    degrees: tuple[int, ...]
    area_pi_multiple: int

    def to_json_dict(self) -> dict:
        return {
            "type0": list(self.type_at_zero),
            "typeInf": list(self.type_at_infinity),
            "T": list(self.totals),
            "delta": list(self.degrees),
            "area_pi": str(self.area_pi_multiple),
        }


def full_report(curve) -> SingularityReport:
    """Types at both singular points, totals, exact degrees, and the area.

    The ramification-formula degrees are computed alongside and must agree
    with the exact ones; a mismatch raises instead of reporting quietly.
    """
    t0 = singularity_type(curve, 0)
    tinf = singularity_type(curve, "inf")
    totals = tuple(a + b for a, b in zip(t0, tinf))
    deg = degrees_exact(curve)
    from_formula = degrees_formula(totals)
    if deg != from_formula:
        raise ValueError(
            f"degree methods disagree: support gives {deg}, "
            f"ramification formula gives {from_formula}"
        )
    report = SingularityReport(
        type_at_zero=t0,
        type_at_infinity=tinf,
        totals=totals,
        degrees=deg,
        area_pi_multiple=int(area(deg, totals)),
    )
    return report


def plucker_identity(degrees, totals) -> bool:
    """The degree/ramification recurrence at every stage.

    With the boundary values delta_{-1} = delta_6 = 0, stage j must satisfy
    T_j = -2 - delta_{j-2} + 2 delta_{j-1} - delta_j.
    """
    d = (0,) + tuple(degrees) + (0,)

    def delta(i: int) -> int:
        return d[i + 1]

    return all(
        totals[j - 1] == -2 - delta(j - 2) + 2 * delta(j - 1) - delta(j)
        for j in range(1, 7)
    )


def symmetry_check(totals) -> bool:
    """The two-point symmetric pattern (a, b, a, a, b, a) of the totals."""
    T = tuple(totals)
    return T[0] == T[5] and T[1] == T[4] and T[2] == T[3] and T[2] == T[0]


def area(degrees, totals) -> Fraction:
    """Area of the middle map as a multiple of pi, audited two ways.

    The degree route gives delta_2 + delta_3; the ramification route gives
    4*(6 + 2*T_1 + T_2).  Both must agree -- a mismatch would mean the
    index conventions drifted, so it raises rather than picking one.
    """
    by_degree = Fraction(degrees[2] + degrees[3])
    by_type = Fraction(4 * (6 + 2 * totals[0] + totals[1]))
    if by_degree != by_type:
        raise ValueError(
            f"area convention audit failed: degrees give {by_degree}*pi, "
            f"ramification gives {by_type}*pi"
        )
    return by_degree


def map_area(degrees, p: int) -> Fraction:
    """Area of the p-th map in the chain: pi times (delta_{p-1} + delta_p)."""
    d = (0,) + tuple(degrees) + (0,)
    if not 0 <= p <= 6:
        raise ValueError("map index must lie in 0..6")
    return Fraction(d[p] + d[p + 1])


def area_type_candidates(pi_multiple: int, *, allow_one_point: bool = False) -> list:
    """Symmetric ramification data compatible with a given total area.

    Each candidate is (number of ramification points, per-point (a, b))
    where the per-point type is (a, b, a, a, b, a) and all points carry the
    same type.  Point counts 0 and 2 are the admissible ones; a single
    ramification point is known to be impossible for these spheres and is
    only enumerated when explicitly requested.
    """
    if pi_multiple % 4:
        return []
    m = pi_multiple // 4 - 6
    if m < 0:
        return []
    counts = (0, 2) + ((1,) if allow_one_point else ())
    out = []
    for npts in counts:
        if npts == 0:
            if m == 0:
                out.append((0, (0, 0)))
            continue
        for a in range(m // (2 * npts) + 1):
            rem = m - 2 * npts * a
            if rem >= 0 and rem % npts == 0 and (a, rem // npts) != (0, 0):
                out.append((npts, (a, rem // npts)))
    return out
