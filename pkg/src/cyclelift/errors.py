"""Exception types shared across the library."""


class CycleLiftError(Exception):
    """Base class for every error raised by this library."""


class PolynomialParseError(CycleLiftError):
    """Malformed polynomial text; carries the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class UnknownVariableError(PolynomialParseError):
    """Identifier in polynomial text is not a declared variable."""

    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown variable '{name}'", offset)
        self.name = name


class NonUnitError(CycleLiftError):
    """Inversion requested for an element that is not a unit at its locus."""


class InvalidFractionError(CycleLiftError):
    """Localized fraction whose denominator lies in the locus prime."""


class NotRegularError(CycleLiftError):
    """Sequence fails the codimension test or an entry misses the origin."""


class UnsupportedBaseError(CycleLiftError):
    """Multiplicity requested for a base that does not generate the locus prime."""


class UnsupportedNumeratorError(CycleLiftError):
    """Boundary coefficient whose denominator is not unit * divisor^k."""


class UnrecognizedLocusError(CycleLiftError):
    """Cycle term supported at a point the scenario does not provide for."""


class NotApplicableError(CycleLiftError):
    """Pipeline invoked on the wrong obstruction branch."""


class ScenarioError(CycleLiftError):
    """Base class for scenario-file problems; carries line and key context."""

    def __init__(self, message: str, line: int | None = None, key: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key '{key}'")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)
        self.line = line
        self.key = key


class MissingKeyError(ScenarioError):
    """Required scenario key absent."""


class ScenarioParseError(ScenarioError):
    """Scenario value failed to parse."""


class ScenarioInvariantError(ScenarioError):
    """Scenario parsed but violates a mathematical invariant."""
