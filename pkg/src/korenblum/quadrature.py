"""Adaptive composite Gauss-Legendre quadrature on finite intervals.

A panel's estimate is compared against the sum of its two half-panel
estimates; the panel is bisected until the difference falls below its
share of the absolute tolerance. Gauss nodes never touch panel
endpoints, so integrable endpoint singularities are refined into
rather than evaluated.
"""
from __future__ import annotations

from typing import Callable, Iterable

import numpy as np

from .errors import QuadratureDivergence

#: bisection levels before a panel is declared stuck
MAX_DEPTH = 40

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)


def _panel(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float) -> float:
    half = 0.5 * (hi - lo)
    x = lo + half * (_NODES + 1.0)
    return half * float(np.sum(_WEIGHTS * np.asarray(f(x), dtype=float)))


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float,
    *,
    breakpoints: Iterable[float] = (),
    max_depth: int = MAX_DEPTH,
) -> tuple[float, float]:
    """Integrate a vectorized integrand over [a, b] to absolute tolerance.

    ``breakpoints`` are interior points where the integrand is known to be
    non-smooth (jumps, kinks); panels never straddle them. Returns
    ``(value, err_est)``. Raises :class:`QuadratureDivergence` when the
    accumulated error of panels that hit ``max_depth`` still exceeds
    ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if b < a:
        raise ValueError("integration bounds must satisfy a <= b")
    if a == b:
        return 0.0, 0.0

    cuts = sorted({float(x) for x in breakpoints if a < x < b})
    edges = [a, *cuts, b]
    share = tol / (len(edges) - 1)

    total = 0.0
    settled_err = 0.0
    stuck_err = 0.0
    stack = [
        (lo, hi, _panel(f, lo, hi), share, 0)
        for lo, hi in zip(edges[:-1], edges[1:])
    ]
    while stack:
        lo, hi, coarse, panel_tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        fine = left + right
        err = abs(fine - coarse)
        if err <= panel_tol or mid <= lo or mid >= hi:
            total += fine
            settled_err += err
        elif depth >= max_depth:
            total += fine
            stuck_err += err
        else:
            stack.append((lo, mid, left, 0.5 * panel_tol, depth + 1))
            stack.append((mid, hi, right, 0.5 * panel_tol, depth + 1))

    if stuck_err > tol:
        raise QuadratureDivergence(
            f"quadrature on [{a}, {b}] left error {stuck_err:.3e} > tol {tol:.3e} "
            f"after {max_depth} bisection levels"
        )
    return total, settled_err + stuck_err
