"""Exception hierarchy shared by all chainlab modules.

Every error the library raises deliberately derives from ChainlabError so
callers (notably the CLI) can separate domain failures from genuine bugs.
"""

from __future__ import annotations


class ChainlabError(Exception):
    """Base class for all errors raised by chainlab on bad inputs."""

    code = "error"

    def payload(self) -> dict:
        """Machine-readable description, used by the CLI error reports."""
        return {"error": self.code, "detail": str(self)}


class DomainError(ChainlabError):
    """An argument lies outside the operation's domain (bad subset, bad
    partition, out-of-range element, signature mismatch, ...)."""

    code = "domain_error"


class UnsupportedSizeError(ChainlabError):
    """The input exceeds an explicit exhaustive-regime cap.

    Caps are part of the contract: nothing is silently truncated.
    """

    code = "unsupported_size"


class NotSimplyDefinableError(ChainlabError):
    """Quantifier-free definition extraction failed: some literal-type class
    meets both a relation and its complement, so no class selection can
    define the relation over the given companion.

    Carries the offending symbol, the impure class, and one witness tuple
    from each side.
    """

    code = "not_simply_definable"

    def __init__(self, symbol: str, literal_type, inside: tuple, outside: tuple):
        self.symbol = symbol
        self.literal_type = literal_type
        self.inside = tuple(inside)
        self.outside = tuple(outside)
        super().__init__(
            f"relation {symbol!r} is not quantifier-free definable over this "
            f"companion: one literal-type class contains {self.inside} (in the "
            f"relation) and {self.outside} (outside it)"
        )

    def payload(self) -> dict:
        return {
            "error": self.code,
            "symbol": self.symbol,
            "witnesses": [list(self.inside), list(self.outside)],
        }


class FormulaError(ChainlabError):
    """Evaluation-time failure: unbound variable, unknown relation symbol,
    or an atom whose arity disagrees with the structure's signature."""

    code = "formula_error"


class ParseError(ChainlabError):
    """Malformed textual input (formula syntax or JSON schema violations)."""

    code = "parse_error"
