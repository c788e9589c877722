"""Exception types raised by the library; the CLI maps them to exit codes."""


class ValentropyError(Exception):
    """Base class for library errors."""


class DimensionMismatchError(ValentropyError, ValueError):
    pass


class ZeroStateError(ValentropyError, ValueError):
    """The zero vector was given where a state (a ray) is required."""


class DimensionCapError(ValentropyError, ValueError):
    """Ambient dimension above what the exhaustive match search accepts."""


class SingularMatrixError(ValentropyError, ValueError):
    """A linear map that must be invertible is not."""


class SingularGramError(ValentropyError, ValueError):
    """Projection requested onto a dependent column set."""


class OrthogonalStateError(ValentropyError, ValueError):
    """Projection of the state onto the target subspace is zero."""


class PatternError(ValentropyError, ValueError):
    """A subspace pattern could not be interpreted."""


class PatternSyntaxError(PatternError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")
