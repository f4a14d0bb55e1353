"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all package-specific errors."""


class InvalidArc(Error):
    """An arc list violates the digraph invariants.

    Carries the offending pair and a short machine-readable reason, one of
    "range", "loop", "antisymmetry".
    """

    def __init__(self, reason: str, pair: tuple) -> None:
        super().__init__(f"invalid arc {pair}: {reason}")
        self.reason = reason
        self.pair = pair


class RangeError(Error):
    """A vertex index or numeric argument lies outside its admissible range."""


class DomainError(Error):
    """An operation was applied outside its domain.

    Raised e.g. when classification is requested for a digraph that contains
    an independent triple.
    """


class CapExceeded(Error):
    """A requested size exceeds a configured or hard cap."""


class NoNonArc(Error):
    """Every vertex pair carries an arc, so there is no non-arc to anchor on."""


class PreconditionViolated(Error):
    """The input fails one or more named preconditions of a construction."""

    def __init__(self, failed: list) -> None:
        super().__init__("preconditions violated: " + ", ".join(failed))
        self.failed = list(failed)


class ConstructionDefect(Error):
    """A construction finished but its output fails a claimed property.

    ``defects`` names the failed claims; ``witness`` holds the partially
    built result for inspection.
    """

    def __init__(self, defects: list, witness=None) -> None:
        super().__init__("construction defects: " + ", ".join(defects))
        self.defects = list(defects)
        self.witness = witness


class EmbeddingError(Error):
    """A vertex map is not an induced-substructure embedding."""


class InternalError(Error):
    """An invariant the code relies on was violated; indicates a bug."""


class InputError(Error):
    """Input data is inconsistent or incomplete for the requested operation."""


class ParseError(Error):
    """A text document does not conform to the digraph file format."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
