"""Exception hierarchy shared by all modules."""


class WilkercertError(Exception):
    """Base class for every error raised by this package."""


class DomainError(WilkercertError):
    """Argument outside the mathematical domain of the requested function."""


class DivisionByZeroInterval(WilkercertError):
    """Interval division where the denominator encloses zero."""


class DegenerateParams(WilkercertError):
    """Parameter pair with k*(k+2) == 0, for which the families collapse."""


class ParamsOutOfStatementRange(WilkercertError):
    """Parameters outside the k-range a statement is asserted for."""


class BracketError(WilkercertError):
    """Root/threshold bracketing failed: endpoints do not straddle."""


class ConfigError(WilkercertError):
    """Malformed certification configuration (empty window, bad depth, ...)."""


class GuardUnavailable(WilkercertError):
    """No implemented endpoint-dominance pattern applies.

    Callers must map this to an Inconclusive verdict, never to Proved.
    """


class NumericalLossOfSignificance(WilkercertError):
    """Enclosure too wide to be useful and no series fallback applies."""
