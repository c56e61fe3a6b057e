"""Radial weights on [0, 1): evaluation, moments, partial masses.

All radial integrals use the kernel 2 r w(r) dr, normalized so the
constant weight 1 has total mass exactly 1. Moments

    m(s) = int_0^1 2 r^{s+1} w(r) dr

are computed in closed form for the constant, step and piecewise-linear
table kinds, and by adaptive quadrature for the standard kind
w(r) = (alpha+1)(1-r^2)^alpha. For alpha < 0 the quadrature runs in the
substituted variable v = (1-r^2)^{alpha+1}, which absorbs the integrable
singularity at r = 1 into a bounded integrand.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .quadrature import integrate

DEFAULT_TOL = 1e-9


class OriginLiminf(enum.Enum):
    """Classification of liminf_{r -> 0+} w(r), used for diagnostics only."""

    POSITIVE_LIMINF = "PositiveLiminf"
    ZERO_NEAR_ORIGIN = "ZeroNearOrigin"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Moment:
    """A radial moment m(s) = int_0^1 2 r^{s+1} w(r) dr."""

    exponent: float
    value: float
    est_error: float


def _power_primitive(s: float, alpha: float, beta: float, r: float) -> float:
    # antiderivative of 2 r^{s+1} (alpha + beta r)
    return 2.0 * alpha * r ** (s + 2) / (s + 2) + 2.0 * beta * r ** (s + 3) / (s + 3)


class RadialWeight:
    """Base class for radial weights; all kinds are immutable and pure."""

    kind: str

    def eval(self, r):
        """Pointwise w(r); accepts scalars or arrays with entries in [0, 1)."""
        raise NotImplementedError

    def breakpoints(self) -> tuple[float, ...]:
        """Interior radii where w is non-smooth (jumps or slope changes)."""
        return ()

    def liminf_at_origin(self) -> OriginLiminf:
        raise NotImplementedError

    def integrate_against(
        self, phi: Callable, a: float, b: float, tol: float
    ) -> tuple[float, float]:
        """int_a^b 2 r w(r) phi(r) dr with absolute error <= tol.

        ``phi`` must accept numpy arrays. Returns (value, err_est).
        """
        raise NotImplementedError

    def power_mass(self, s: float, a: float, b: float, tol: float) -> tuple[float, float]:
        """int_a^b 2 r^{s+1} w(r) dr, in closed form where the kind permits."""
        return self.integrate_against(lambda r: r**s, a, b, tol)

    def to_spec(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantWeight(RadialWeight):
    level: float

    kind = "constant"

    def __post_init__(self):
        if not (np.isfinite(self.level) and self.level > 0):
            raise DomainError(f"constant weight needs level > 0, got {self.level}")

    def eval(self, r):
        return np.full_like(np.asarray(r, dtype=float), self.level)

    def liminf_at_origin(self) -> OriginLiminf:
        return OriginLiminf.POSITIVE_LIMINF

    def integrate_against(self, phi, a, b, tol):
        lvl = self.level
        return integrate(lambda r: 2.0 * lvl * r * phi(r), a, b, tol)

    def power_mass(self, s, a, b, tol):
        return self.level * (_power_primitive(s, 1.0, 0.0, b) - _power_primitive(s, 1.0, 0.0, a)), 0.0

    def to_spec(self) -> dict:
        return {"kind": "constant", "level": self.level}


@dataclass(frozen=True)
class StandardWeight(RadialWeight):
    """w(r) = (alpha+1)(1-r^2)^alpha, integrable iff alpha > -1."""

    alpha: float

    kind = "standard"

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha > -1.0):
            raise DomainError(
                f"standard weight needs alpha > -1 for integrability, got {self.alpha}"
            )

    def eval(self, r):
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore"):
            return (self.alpha + 1.0) * (1.0 - r * r) ** self.alpha

    def liminf_at_origin(self) -> OriginLiminf:
        return OriginLiminf.POSITIVE_LIMINF

    def integrate_against(self, phi, a, b, tol):
        al = self.alpha
        if al >= 0.0:
            def direct(r):
                return 2.0 * (al + 1.0) * r * (1.0 - r * r) ** al * phi(r)

            return integrate(direct, a, b, tol)

        # v = (1-r^2)^{alpha+1} turns the kernel into plain dv and keeps the
        # transformed integrand bounded up to r = 1.
        q = 1.0 / (al + 1.0)
        va = (1.0 - a * a) ** (al + 1.0)
        vb = (1.0 - b * b) ** (al + 1.0)

        def transformed(v):
            u = np.clip(1.0 - v**q, 0.0, 1.0)
            return phi(np.sqrt(u))

        return integrate(transformed, vb, va, tol)

    def to_spec(self) -> dict:
        return {"kind": "standard", "alpha": self.alpha}


@dataclass(frozen=True)
class StepWeight(RadialWeight):
    """0 on [0, R), 1 on [R, 1)."""

    R: float

    kind = "step"

    def __post_init__(self):
        if not (np.isfinite(self.R) and 0.0 < self.R < 1.0):
            raise DomainError(f"step weight needs R in (0,1), got {self.R}")

    def eval(self, r):
        return np.where(np.asarray(r, dtype=float) >= self.R, 1.0, 0.0)

    def breakpoints(self):
        return (self.R,)

    def liminf_at_origin(self) -> OriginLiminf:
        return OriginLiminf.ZERO_NEAR_ORIGIN

    def integrate_against(self, phi, a, b, tol):
        lo = max(a, self.R)
        if b <= lo:
            return 0.0, 0.0
        return integrate(lambda r: 2.0 * r * phi(r), lo, b, tol)

    def power_mass(self, s, a, b, tol):
        lo = max(a, self.R)
        if b <= lo:
            return 0.0, 0.0
        return _power_primitive(s, 1.0, 0.0, b) - _power_primitive(s, 1.0, 0.0, lo), 0.0

    def to_spec(self) -> dict:
        return {"kind": "step", "R": self.R}


@dataclass(frozen=True)
class TableWeight(RadialWeight):
    """Piecewise-linear between knots, constant beyond the last knot.

    Knots must start at 0, increase strictly and stay below 1; values are
    finite and nonnegative with positive total mass.
    """

    knots: tuple[float, ...]
    values: tuple[float, ...]

    kind = "table"

    def __post_init__(self):
        knots = tuple(float(x) for x in self.knots)
        values = tuple(float(x) for x in self.values)
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "values", values)
        if len(knots) != len(values) or not knots:
            raise DomainError("table weight needs matching, nonempty knots and values")
        if knots[0] != 0.0 or knots[-1] >= 1.0:
            raise DomainError("table knots must start at 0 and end below 1")
        if any(b <= a for a, b in zip(knots, knots[1:])):
            raise DomainError("table knots must be strictly increasing")
        if not all(np.isfinite(v) and v >= 0.0 for v in values):
            raise DomainError("table values must be finite and nonnegative")
        mass, _ = self.power_mass(0.0, 0.0, 1.0, DEFAULT_TOL)
        if mass <= 0.0:
            raise DomainError("table weight has zero total mass")

    def _pieces(self):
        # (lo, hi, alpha, beta) with w(r) = alpha + beta r on [lo, hi]
        ks, vs = self.knots, self.values
        for i in range(len(ks) - 1):
            slope = (vs[i + 1] - vs[i]) / (ks[i + 1] - ks[i])
            yield ks[i], ks[i + 1], vs[i] - slope * ks[i], slope
        yield ks[-1], 1.0, vs[-1], 0.0

    def eval(self, r):
        return np.interp(np.asarray(r, dtype=float), self.knots, self.values)

    def breakpoints(self):
        return tuple(k for k in self.knots if 0.0 < k < 1.0)

    def liminf_at_origin(self) -> OriginLiminf:
        if self.values[0] > 0.0:
            return OriginLiminf.POSITIVE_LIMINF
        return OriginLiminf.ZERO_NEAR_ORIGIN

    def integrate_against(self, phi, a, b, tol):
        def f(r):
            return 2.0 * r * self.eval(r) * phi(r)

        return integrate(f, a, b, tol, breakpoints=self.breakpoints())

    def power_mass(self, s, a, b, tol):
        total = 0.0
        for lo, hi, alpha, beta in self._pieces():
            lo, hi = max(lo, a), min(hi, b)
            if hi > lo:
                total += _power_primitive(s, alpha, beta, hi) - _power_primitive(
                    s, alpha, beta, lo
                )
        return total, 0.0

    def to_spec(self) -> dict:
        return {"kind": "table", "r": list(self.knots), "w": list(self.values)}


def moment(w: RadialWeight, s: float, tol: float = DEFAULT_TOL) -> Moment:
    """m(s) = int_0^1 2 r^{s+1} w(r) dr, nonincreasing in s."""
    if s < 0:
        raise DomainError(f"moment exponent must be nonnegative, got {s}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    value, err = w.power_mass(s, 0.0, 1.0, tol)
    return Moment(exponent=s, value=value, est_error=err)


def inner_mass(w: RadialWeight, c: float, tol: float = DEFAULT_TOL) -> float:
    """int_0^c 2 r w(r) dr, the weight mass of the disk of radius c."""
    if not 0.0 < c < 1.0:
        raise DomainError(f"inner_mass needs c in (0,1), got {c}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    value, _ = w.power_mass(0.0, 0.0, c, tol)
    return value


def liminf_at_origin_hint(w: RadialWeight) -> OriginLiminf:
    """Classify liminf of w at the origin by kind; advisory, never blocking."""
    return w.liminf_at_origin()


def weight_from_spec(spec) -> RadialWeight:
    """Build a weight from its JSON spec (dict or JSON string)."""
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid weight JSON: {exc}") from exc
    if not isinstance(spec, dict) or "kind" not in spec:
        raise DomainError("weight spec must be an object with a 'kind' field")
    kind = spec["kind"]
    try:
        if kind == "constant":
            return ConstantWeight(level=float(spec["level"]))
        if kind == "standard":
            return StandardWeight(alpha=float(spec["alpha"]))
        if kind == "step":
            return StepWeight(R=float(spec["R"]))
        if kind == "table":
            return TableWeight(knots=tuple(spec["r"]), values=tuple(spec["w"]))
    except KeyError as exc:
        raise DomainError(f"weight spec missing field {exc} for kind {kind!r}") from exc
    except (TypeError, ValueError) as exc:
        raise DomainError(f"malformed weight spec: {exc}") from exc
    raise DomainError(f"unknown weight kind {kind!r}")
