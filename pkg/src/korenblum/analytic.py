"""Polynomials on the unit disk: circle means and weighted Bergman norms.

The p-mean over the circle of radius r,

    M_p(r; f) = ( (1/2pi) int_0^{2pi} |f(r e^{i t})|^p dt )^{1/p},

is computed by the uniform trapezoid rule in the angle (exact mean of
equispaced samples, spectrally accurate for smooth integrands) with node
doubling until two successive refinements agree. The weighted norm

    ||f||_{p,w} = ( int_0^1 2 r w(r) M_p^p(r; f) dr )^{1/p}

nests that angular quadrature inside the radial quadrature of the weight.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, MonotonicityViolation
from .weights import DEFAULT_TOL, RadialWeight, moment

DEGREE_CAP = 64

_THETA_CAP_BATCH = 1 << 17
_THETA_CAP_SINGLE = 1 << 20


@dataclass(frozen=True)
class Polynomial:
    """Analytic function given by finitely many complex coefficients, a0 first."""

    coeffs: tuple[complex, ...]
    degree_cap: int = field(default=DEGREE_CAP, compare=False, repr=False)

    def __post_init__(self):
        cs = [complex(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) - 1 > self.degree_cap:
            raise DomainError(
                f"degree {len(cs) - 1} exceeds the cap {self.degree_cap}"
            )
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, n: int, coeff: complex = 1.0) -> "Polynomial":
        return cls((0,) * n + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, z):
        """Horner evaluation; accepts scalars or numpy arrays."""
        if not self.coeffs:
            return np.zeros_like(z, dtype=complex) if isinstance(z, np.ndarray) else 0j
        if isinstance(z, np.ndarray):
            acc = np.full(z.shape, self.coeffs[-1], dtype=complex)
            for a in reversed(self.coeffs[:-1]):
                acc = acc * z + a
            return acc
        acc = self.coeffs[-1]
        for a in reversed(self.coeffs[:-1]):
            acc = acc * z + a
        return acc

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial(())
        prod = np.convolve(np.asarray(self.coeffs), np.asarray(other.coeffs))
        return Polynomial(tuple(prod))

    def scale(self, factor: complex) -> "Polynomial":
        return Polynomial(tuple(factor * c for c in self.coeffs))

    def to_spec(self) -> dict:
        return {"coeffs": [[c.real, c.imag] for c in self.coeffs]}


def polynomial_from_spec(spec) -> Polynomial:
    """Build a polynomial from its JSON spec (dict or JSON string)."""
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid polynomial JSON: {exc}") from exc
    if not isinstance(spec, dict) or "coeffs" not in spec:
        raise DomainError("polynomial spec must be an object with a 'coeffs' field")
    coeffs = []
    for entry in spec["coeffs"]:
        if isinstance(entry, (list, tuple)):
            if len(entry) != 2:
                raise DomainError(f"coefficient entries are [re, im], got {entry!r}")
            coeffs.append(complex(entry[0], entry[1]))
        else:
            coeffs.append(complex(entry))
    return Polynomial(tuple(coeffs))


@dataclass(frozen=True)
class MeanProfile:
    """Circle means of one polynomial along an increasing radius grid."""

    p: float
    radii: tuple[float, ...]
    values: tuple[float, ...]
    est_error: float


def _half_powers(mod2: np.ndarray, p: float) -> np.ndarray:
    # |f|^p from |f|^2, avoiding the generic pow where p is special
    if p == 2.0:
        return mod2
    if p == 1.0:
        return np.sqrt(mod2)
    if p == 4.0:
        return mod2 * mod2
    return mod2 ** (p / 2.0)


_circle_cache: dict[int, np.ndarray] = {}
_CIRCLE_CACHE_MAX_N = 8192


def _circle_grid(n: int, degree: int) -> np.ndarray:
    """Rows e^{i j t_k} for j = 0..degree over n equispaced angles t_k."""
    cached = _circle_cache.get(n)
    if cached is not None and cached.shape[0] > degree:
        return cached[: degree + 1]
    base = np.exp(2j * np.pi / n * np.arange(n))
    circle = np.empty((degree + 1, n), dtype=complex)
    circle[0] = 1.0
    for j in range(1, degree + 1):
        circle[j] = circle[j - 1] * base
    if n <= _CIRCLE_CACHE_MAX_N:
        _circle_cache[n] = circle
    return circle


def _abs_pow_means(
    f: Polynomial, radii: np.ndarray, p: float, n: int, offset: float = 0.0
) -> np.ndarray:
    """Mean over n equispaced angles (starting at `offset`) of |f|^p, per radius.

    f(r e^{i t}) = sum_j a_j r^j e^{i j t} is separable, so the circle grid
    is one small matrix product instead of a Horner pass per node.
    """
    degree = f.degree
    js = np.arange(degree + 1)
    circle = _circle_grid(n, degree)
    amps = np.asarray(f.coeffs)[None, :] * radii[:, None] ** js[None, :]
    if offset:
        amps = amps * np.exp(1j * offset * js)[None, :]
    fz = amps @ circle
    mod2 = fz.real**2 + fz.imag**2
    return np.mean(_half_powers(mod2, p), axis=1)


def _mean_pow_batch(
    f: Polynomial, radii: np.ndarray, p: float, tol: float, cap: int = _THETA_CAP_BATCH
) -> tuple[np.ndarray, np.ndarray]:
    """M_p^p(r; f) row per radius, doubling the shared angle grid.

    The doubled grid is the current grid plus its half-spacing offset, so
    each refinement reuses every node already evaluated. Convergence is
    measured on the means M themselves (relative, per row).
    """
    n = max(256, 8 * (f.degree + 1))
    vals = _abs_pow_means(f, radii, p, n)
    means = vals ** (1.0 / p)
    while True:
        odd = _abs_pow_means(f, radii, p, n, offset=np.pi / n)
        vals_next = 0.5 * (vals + odd)
        n *= 2
        means_next = vals_next ** (1.0 / p)
        diff = np.abs(means_next - means)
        vals, means = vals_next, means_next
        if np.all(diff <= tol * np.maximum(means, 1e-300)) or n >= cap:
            return vals, diff


def integral_mean(f: Polynomial, r: float, p: float, tol: float = DEFAULT_TOL) -> float:
    """M_p(r; f) with relative error about tol (zero polynomial gives 0)."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"integral_mean needs r in [0,1), got {r}")
    if p <= 0 or tol <= 0:
        raise DomainError("integral_mean needs p > 0 and tol > 0")
    if f.is_zero:
        return 0.0
    vals, _ = _mean_pow_batch(f, np.array([r]), p, tol, cap=_THETA_CAP_SINGLE)
    return float(vals[0] ** (1.0 / p))


def weighted_norm(
    f: Polynomial, w: RadialWeight, p: float, tol: float = DEFAULT_TOL
) -> float:
    """||f||_{p,w} with relative error about tol.

    The radial quadrature runs twice: a coarse pass to learn the scale of
    the integral, then a pass whose absolute tolerance targets the final
    relative accuracy of the norm.
    """
    if p <= 0 or tol <= 0:
        raise DomainError("weighted_norm needs p > 0 and tol > 0")
    if f.is_zero:
        return 0.0

    theta_tol = 0.25 * tol

    def phi(r):
        vals, _ = _mean_pow_batch(f, np.asarray(r, dtype=float), p, theta_tol)
        return vals

    scale = float(np.sum(np.abs(f.coeffs))) ** p * moment(w, 0.0, tol=1e-6).value
    coarse_tol = max(1e-3 * scale, 1e-300)
    coarse, _ = w.integrate_against(phi, 0.0, 1.0, coarse_tol)
    fine_tol = max(0.25 * tol * p * max(coarse, 1e-300), 1e-300)
    if fine_tol >= coarse_tol:
        return max(coarse, 0.0) ** (1.0 / p)
    value, _ = w.integrate_against(phi, 0.0, 1.0, fine_tol)
    return max(value, 0.0) ** (1.0 / p)


def mean_profile(f: Polynomial, p: float, radii) -> MeanProfile:
    """Circle means along a radius grid, checked for monotone growth."""
    radii = tuple(float(r) for r in radii)
    if not radii or any(not 0.0 < r < 1.0 for r in radii):
        raise DomainError("mean_profile needs radii inside (0,1)")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise DomainError("mean_profile radii must be strictly increasing")
    if p <= 0:
        raise DomainError("mean_profile needs p > 0")
    if f.is_zero:
        return MeanProfile(p=p, radii=radii, values=(0.0,) * len(radii), est_error=0.0)

    vals, diffs = _mean_pow_batch(f, np.asarray(radii), p, DEFAULT_TOL)
    means = vals ** (1.0 / p)
    est = float(np.max(diffs)) if len(diffs) else 0.0
    drop_tol = 10.0 * max(est, 1e-15)
    for i in range(len(means) - 1):
        if means[i + 1] < means[i] - drop_tol:
            raise MonotonicityViolation(
                f"circle means dropped from {means[i]!r} at r={radii[i]} to "
                f"{means[i + 1]!r} at r={radii[i + 1]} (allowance {drop_tol:.3e})"
            )
    return MeanProfile(p=p, radii=radii, values=tuple(float(m) for m in means), est_error=est)
