"""Explicit failures of the domination principle.

Two constructions are implemented. For 0 < p < 1 the two-parameter family

    f(z) = (c^n / (c^n + e^n)) (z^n + e^n),   g(z) = z^n,

with n(1-p) > 2 and e in (0, c), satisfies |f| <= |g| on {c <= |z| < 1}
identically, yet ||f|| > ||g|| for small enough e whenever the weight has
positive liminf at the origin. For every p > 0 the pair f = 1, g = z/c
reverses the norms as soon as c^p exceeds the moment ratio m(p)/m(0),
which bounds the largest admissible radius strictly below 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analytic import Polynomial, weighted_norm
from .certifier import check_domination
from .errors import DomainError, KorenblumError, NoWitnessFound
from .quadrature import integrate
from .weights import DEFAULT_TOL, RadialWeight, liminf_at_origin_hint, moment

EPSILON_SCAN_STEPS = 48


@dataclass(frozen=True)
class CounterexampleWitness:
    """A norm-reversing dominated pair: evidence that radius c is not admissible."""

    p: float
    c: float
    n: int
    epsilon: float
    norm_f: float
    norm_g: float
    gap: float
    domination_checked: bool


@dataclass(frozen=True)
class RadiusUpperBound:
    """Moment-ratio bound: no radius above c_star is admissible for exponent p."""

    p: float
    c_star: float
    witness_c: float


@dataclass(frozen=True)
class FinalInequalityCheck:
    lhs: float
    rhs: float
    holds: bool


def choose_n(p: float) -> int:
    """Smallest integer n with n(1-p) > 2."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"choose_n needs p in (0,1), got {p}")
    n = int(2.0 / (1.0 - p)) + 1
    while n > 1 and (n - 1) * (1.0 - p) > 2.0:
        n -= 1
    while n * (1.0 - p) <= 2.0:
        n += 1
    return n


def family_pair(c: float, n: int, epsilon: float) -> tuple[Polynomial, Polynomial]:
    """The explicit pair (f, g) at parameters (c, n, epsilon)."""
    if not 0.0 < epsilon < c < 1.0:
        raise DomainError(f"need 0 < epsilon < c < 1, got epsilon={epsilon}, c={c}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    prefactor = c**n / (c**n + epsilon**n)
    f = Polynomial((prefactor * epsilon**n,) + (0.0,) * (n - 1) + (prefactor,))
    return f, Polynomial.monomial(n)


def find_counterexample(
    p: float,
    c: float,
    w: RadialWeight,
    quad_tol: float = DEFAULT_TOL,
    n: int | None = None,
) -> CounterexampleWitness:
    """Scan epsilon = c 2^{-j}, j = 1..48, for the widest norm reversal.

    With n unset, p must lie in (0,1) and n is the smallest exponent with
    n(1-p) > 2. An explicit n may be forced for any p > 0, which is how
    the p >= 1 immunity sweeps are run. Raises :class:`NoWitnessFound`
    when no scanned epsilon clears the gap threshold 2*quad_tol.
    """
    if p <= 0:
        raise DomainError(f"find_counterexample needs p > 0, got {p}")
    if not 0.0 < c < 1.0:
        raise DomainError(f"find_counterexample needs c in (0,1), got {c}")
    if quad_tol <= 0:
        raise DomainError("quad_tol must be positive")
    if n is None:
        n = choose_n(p)
    elif n < 1:
        raise DomainError(f"forced n must be a positive integer, got {n}")

    norm_g = weighted_norm(Polynomial.monomial(n), w, p, tol=quad_tol)
    best_j, best_gap, best_norm_f = None, -np.inf, 0.0
    for j in range(1, EPSILON_SCAN_STEPS + 1):
        epsilon = c * 2.0**-j
        f, _ = family_pair(c, n, epsilon)
        norm_f = weighted_norm(f, w, p, tol=quad_tol)
        gap = norm_f - norm_g
        if gap > best_gap:
            best_j, best_gap, best_norm_f = j, gap, norm_f
    if best_gap <= 2.0 * quad_tol:
        hint = liminf_at_origin_hint(w).value
        raise NoWitnessFound(
            f"no epsilon in the scan reversed the norms at p={p}, c={c}, n={n} "
            f"(best gap {best_gap:.3e}; weight liminf hint: {hint})"
        )
    epsilon = c * 2.0**-best_j
    f, g = family_pair(c, n, epsilon)
    report = check_domination(f, g, c)
    if not report.conclusive:
        raise NoWitnessFound(
            f"norm reversal found at epsilon={epsilon} but domination sampling "
            f"failed (min gap {report.min_gap:.3e}); rejecting the witness"
        )
    return CounterexampleWitness(
        p=p,
        c=c,
        n=n,
        epsilon=epsilon,
        norm_f=best_norm_f,
        norm_g=norm_g,
        gap=best_gap,
        domination_checked=True,
    )


def revalidate_witness(
    witness: CounterexampleWitness, w: RadialWeight, quad_tol: float
) -> CounterexampleWitness:
    """Recompute a witness's norms and domination at a fresh tolerance."""
    f, g = family_pair(witness.c, witness.n, witness.epsilon)
    norm_f = weighted_norm(f, w, witness.p, tol=quad_tol)
    norm_g = weighted_norm(g, w, witness.p, tol=quad_tol)
    gap = norm_f - norm_g
    if gap <= 2.0 * quad_tol:
        raise NoWitnessFound(
            f"witness gap {gap:.3e} fell below 2*{quad_tol} on revalidation"
        )
    report = check_domination(f, g, witness.c)
    if not report.conclusive:
        raise NoWitnessFound("witness failed domination sampling on revalidation")
    return CounterexampleWitness(
        p=witness.p,
        c=witness.c,
        n=witness.n,
        epsilon=witness.epsilon,
        norm_f=norm_f,
        norm_g=norm_g,
        gap=gap,
        domination_checked=True,
    )


def check_final_inequality(
    p: float,
    c: float,
    w: RadialWeight,
    n: int,
    epsilon: float,
    quad_tol: float = DEFAULT_TOL,
) -> FinalInequalityCheck:
    """The sufficient inequality whose truth forces the norm reversal:

        int_0^1 (1 - r^{np}) 2 r w(epsilon r) dr
            >  (p / c^n) epsilon^{n(1-p)-2} int_0^1 2 r w(r) r^{np} dr.

    The left side samples the dilated weight near the origin; the right
    side vanishes as epsilon -> 0 because n(1-p) > 2.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"check_final_inequality needs p in (0,1), got {p}")
    if not 0.0 < epsilon < c < 1.0:
        raise DomainError(f"need 0 < epsilon < c < 1, got epsilon={epsilon}, c={c}")
    if n * (1.0 - p) <= 2.0:
        raise DomainError(f"need n(1-p) > 2, got n={n}, p={p}")
    if quad_tol <= 0:
        raise DomainError("quad_tol must be positive")

    np_exp = n * p

    def lhs_integrand(r):
        return (1.0 - r**np_exp) * 2.0 * r * w.eval(epsilon * r)

    cuts = [b / epsilon for b in w.breakpoints() if 0.0 < b / epsilon < 1.0]
    lhs, _ = integrate(lhs_integrand, 0.0, 1.0, quad_tol, breakpoints=cuts)
    rhs = (p / c**n) * epsilon ** (n * (1.0 - p) - 2.0) * moment(w, np_exp, quad_tol).value
    return FinalInequalityCheck(lhs=lhs, rhs=rhs, holds=lhs > rhs + 2.0 * quad_tol)


def monomial_upper_bound(
    p: float, w: RadialWeight, quad_tol: float = DEFAULT_TOL
) -> RadiusUpperBound:
    """c_star = (m(p)/m(0))^{1/p}, verified by the explicit pair (1, z/c).

    At witness_c slightly above c_star, |1| <= |z|/witness_c on the
    annulus while ||z/witness_c|| < ||1||, so no radius above c_star is
    admissible. Both facts are re-verified numerically before returning.
    The domination sampling starts a relative 1e-12 above witness_c, off
    the inner boundary where the two moduli are exactly equal and the
    sampled gap would be rounding noise.
    """
    if p <= 0:
        raise DomainError(f"monomial_upper_bound needs p > 0, got {p}")
    m_p = moment(w, p, tol=quad_tol).value
    m_0 = moment(w, 0.0, tol=quad_tol).value
    c_star = (m_p / m_0) ** (1.0 / p)
    witness_c = min(1.0 - 1e-9, c_star * (1.0 + 1e-3))

    unit = Polynomial((1.0,))
    g = Polynomial((0.0, 1.0 / witness_c))
    norm_unit = weighted_norm(unit, w, p, tol=quad_tol)
    norm_g = weighted_norm(g, w, p, tol=quad_tol)
    report = check_domination(unit, g, witness_c * (1.0 + 1e-12))
    if not report.conclusive or not norm_g < norm_unit:
        raise KorenblumError(
            f"monomial bound verification failed at p={p}: "
            f"min_gap={report.min_gap:.3e}, ||g||={norm_g!r}, ||1||={norm_unit!r}"
        )
    return RadiusUpperBound(p=p, c_star=c_star, witness_c=witness_c)


def witness_to_json(witness: CounterexampleWitness) -> dict:
    return {
        "p": witness.p,
        "c": witness.c,
        "n": witness.n,
        "epsilon": witness.epsilon,
        "norm_f": witness.norm_f,
        "norm_g": witness.norm_g,
        "gap": witness.gap,
    }


def witness_from_json(obj: dict) -> CounterexampleWitness:
    return CounterexampleWitness(
        p=float(obj["p"]),
        c=float(obj["c"]),
        n=int(obj["n"]),
        epsilon=float(obj["epsilon"]),
        norm_f=float(obj["norm_f"]),
        norm_g=float(obj["norm_g"]),
        gap=float(obj["gap"]),
        domination_checked=True,
    )
