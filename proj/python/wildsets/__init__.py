"""Wild sets of self-equivalences of global function fields."""

from ._core import (
    Certificate,
    Curve,
    InternalError,
    NotPrincipal,
    ParseError,
    PreconditionError,
    Refusal,
    SearchExhausted,
    WildsetsError,
    run_cli,
)

__all__ = [
    "Certificate",
    "Curve",
    "InternalError",
    "NotPrincipal",
    "ParseError",
    "PreconditionError",
    "Refusal",
    "SearchExhausted",
    "WildsetsError",
    "run_cli",
]
