"""Exception hierarchy shared by all modules."""


class WirsingError(Exception):
    """Base class for package errors."""


class DomainError(WirsingError):
    """A value or parameter lies outside the mathematical domain of an operation."""


class PrecisionError(WirsingError):
    """Working precision was exhausted; raise the oracle precision and retry."""


class SearchExhausted(WirsingError):
    """A bounded search terminated without finding any admissible solution."""


class InputError(WirsingError):
    """Structurally invalid input (missing estimates, unmatched sample pairs, ...)."""
