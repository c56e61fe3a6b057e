"""Exception taxonomy shared across the package."""


class KorenblumError(Exception):
    """Base class for all package-specific errors."""


class DomainError(KorenblumError, ValueError):
    """An argument lies outside an operation's mathematical domain."""


class QuadratureDivergence(KorenblumError):
    """Adaptive quadrature exhausted its refinement budget.

    Signals an effectively non-integrable integrand, typically a weight
    whose singular behaviour near r = 1 is too strong.
    """


class MonotonicityViolation(KorenblumError):
    """A provably monotone quantity decreased beyond quadrature error.

    Integral means are nondecreasing in the radius; a violation beyond
    the estimated quadrature error indicates a misconfigured mean
    computation, not a mathematical surprise.
    """


class NoCertificate(KorenblumError):
    """The certification scan found no radius with a positive margin."""


class NoWitnessFound(KorenblumError):
    """The counterexample search exhausted its grid without a witness."""
