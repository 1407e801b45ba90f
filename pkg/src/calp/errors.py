"""Exception types shared across the package."""

from __future__ import annotations


class CalpError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatchError(CalpError):
    """An event references an element or a domain outside the declared frames."""


class ResourceLimitError(CalpError):
    """A grounding or world-enumeration cap was exceeded."""


class StratificationError(CalpError):
    """The ground program has a cycle through negation, so worlds may lack a
    total model."""

    def __init__(self, message: str, cycle: tuple[str, ...] | None = None):
        super().__init__(message)
        self.cycle = cycle


class InconsistentChoiceError(CalpError):
    """A composite choice selects contradictory alternatives."""


class ExplanationError(CalpError):
    """No sound covering set of explanations exists for the query."""


class ProgramError(CalpError):
    """Parsing or validation failed; carries the collected diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        lines = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"invalid program: {lines}")
