"""Certify admissible radii and verify domination instances.

A radius c is certified for a weight w when

    int_0^c 2 r w(r) dr  <=  int_c^1 rho w(rho) / H(rho, c) drho

holds with a margin, where H is the explicit bound from
:mod:`korenblum.schuster` and 1/H is taken as 0 wherever the bound is
vacuous. The inequality does not involve the exponent p: a certified c is
admissible for every p >= 1 simultaneously.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analytic import Polynomial, weighted_norm
from .errors import DomainError, NoCertificate
from .schuster import inverse_H
from .weights import DEFAULT_TOL, RadialWeight, weight_from_spec

C_GRID_LO = 1e-6
C_GRID_HI = 0.25


@dataclass(frozen=True)
class RadiusCertificate:
    """A certified admissible radius with both sides of the inequality."""

    c: float
    inner: float
    outer: float
    margin: float
    quad_tol: float


@dataclass(frozen=True)
class CertificateScanPoint:
    c: float
    inner: float
    outer: float
    margin: float
    admissible: bool


@dataclass(frozen=True)
class DominationReport:
    """Sampled check of |f| <= |g| on the annulus {c <= |z| < 1}.

    Sampling evidence, not proof: ``conclusive`` means no violation was
    seen on the grid.
    """

    c: float
    min_gap: float
    grid: tuple[int, int]
    conclusive: bool


@dataclass(frozen=True)
class InstanceReport:
    dominates: bool
    norm_f: float
    norm_g: float
    principle_holds: bool


def radius_grid(grid: int, lo: float = C_GRID_LO, hi: float = C_GRID_HI) -> np.ndarray:
    """Geometric midpoint grid of candidate radii strictly inside (lo, hi)."""
    ratio = (hi / lo) ** (1.0 / grid)
    return lo * ratio ** (np.arange(grid) + 0.5)


def _sides_at(w: RadialWeight, c: float, quad_tol: float) -> tuple[float, float]:
    inner, _ = w.power_mass(0.0, 0.0, c, quad_tol)

    def phi(rho):
        return 0.5 * inverse_H(rho, c)

    outer, _ = w.integrate_against(phi, c, 1.0, quad_tol)
    return inner, outer


def certification_scan(
    w: RadialWeight, quad_tol: float = DEFAULT_TOL, grid: int = 64
) -> list[CertificateScanPoint]:
    """Both sides of the certification inequality on the whole radius grid."""
    if grid < 32:
        raise DomainError(f"certification grid must be >= 32, got {grid}")
    if quad_tol <= 0:
        raise DomainError("quad_tol must be positive")
    points = []
    for c in radius_grid(grid):
        inner, outer = _sides_at(w, float(c), quad_tol)
        margin = outer - inner
        points.append(
            CertificateScanPoint(
                c=float(c),
                inner=inner,
                outer=outer,
                margin=margin,
                admissible=margin > 2.0 * quad_tol,
            )
        )
    return points


def certify(
    w: RadialWeight, quad_tol: float = DEFAULT_TOL, grid: int = 64
) -> RadiusCertificate:
    """Largest grid radius whose certification margin clears 2*quad_tol.

    Raises :class:`NoCertificate` when no grid point passes; the sufficient
    condition can fail even though some admissible radius always exists.
    """
    best = None
    for point in certification_scan(w, quad_tol=quad_tol, grid=grid):
        if point.admissible:
            best = point
    if best is None:
        raise NoCertificate(
            f"no radius in ({C_GRID_LO}, {C_GRID_HI}) cleared margin 2*{quad_tol}"
        )
    return RadiusCertificate(
        c=best.c, inner=best.inner, outer=best.outer, margin=best.margin, quad_tol=quad_tol
    )


def check_domination(
    f: Polynomial, g: Polynomial, c: float, grid: tuple[int, int] = (64, 256)
) -> DominationReport:
    """Minimum of |g| - |f| on a tensor grid over the annulus {c <= |z| < 1}."""
    if not 0.0 < c < 1.0:
        raise DomainError(f"check_domination needs c in (0,1), got {c}")
    n_r, n_a = grid
    if n_r < 16 or n_a < 16:
        raise DomainError(f"domination grid sizes must be >= 16, got {grid}")
    radii = np.linspace(c, 1.0 - 1e-6, n_r)
    # midpoint-offset angles keep equality rays (e.g. phase 0 of a monomial
    # pair) off the grid, where the sampled gap would be rounding noise
    angles = np.exp(2j * np.pi * (np.arange(n_a) + 0.5) / n_a)
    z = radii[:, None] * angles[None, :]
    gap = np.abs(g(z)) - np.abs(f(z))
    min_gap = float(np.min(gap))
    return DominationReport(c=c, min_gap=min_gap, grid=(n_r, n_a), conclusive=min_gap >= 0.0)


def verify_instance(
    f: Polynomial,
    g: Polynomial,
    w: RadialWeight,
    p: float,
    c: float,
    tol: float = DEFAULT_TOL,
) -> InstanceReport:
    """Pair a sampled domination check with the weighted-norm comparison."""
    if p <= 0:
        raise DomainError(f"verify_instance needs p > 0, got {p}")
    report = check_domination(f, g, c)
    norm_f = weighted_norm(f, w, p, tol=tol)
    norm_g = weighted_norm(g, w, p, tol=tol)
    return InstanceReport(
        dominates=report.conclusive,
        norm_f=norm_f,
        norm_g=norm_g,
        principle_holds=norm_f <= norm_g + 2.0 * tol,
    )


def random_dominating_pair(
    rng: np.random.Generator, max_degree: int = 8
) -> tuple[Polynomial, Polynomial]:
    """A random pair (f, g) with f = h*g and |h| <= 1 on the closed disk.

    h is either a monomial z^k or an affine contraction (z + a)/2 with
    |a| <= 1, so |f| <= |g| holds on every annulus; callers still confirm
    by sampling before relying on it.
    """
    while True:
        degree = int(rng.integers(0, max_degree + 1))
        re = rng.standard_normal(degree + 1)
        im = rng.standard_normal(degree + 1)
        coeffs = re + 1j * im
        if np.any(coeffs != 0):
            break
    g = Polynomial(tuple(coeffs))
    if rng.random() < 0.5:
        k = int(rng.integers(1, 4))
        h = Polynomial.monomial(k)
    else:
        a = rng.random() * np.exp(2j * np.pi * rng.random())
        h = Polynomial((a / 2.0, 0.5))
    return h * g, g


def certificate_to_json(cert: RadiusCertificate, w: RadialWeight) -> dict:
    return {
        "c": cert.c,
        "inner": cert.inner,
        "outer": cert.outer,
        "margin": cert.margin,
        "quad_tol": cert.quad_tol,
        "weight": w.to_spec(),
    }


def certificate_from_json(obj: dict) -> tuple[RadiusCertificate, RadialWeight]:
    cert = RadiusCertificate(
        c=float(obj["c"]),
        inner=float(obj["inner"]),
        outer=float(obj["outer"]),
        margin=float(obj["margin"]),
        quad_tol=float(obj["quad_tol"]),
    )
    return cert, weight_from_spec(obj["weight"])
