"""Verification reports shared by the identity, orthogonality and root checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .poly import UniPoly


def rational_str(q) -> str:
    """Canonical "p/q" form of a rational ("p" when q == 1)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_jsonable(value: Any) -> Any:
    """Fractions become "p/q" strings, polynomials coefficient lists; ints (indices) stay ints."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, UniPoly):
        return [rational_str(c) for c in value.coeffs]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass
class VerificationReport:
    """Outcome of one identity check at one parameter point.

    ``witness`` is set exactly when the check failed; it holds the first
    failing sub-point (lexicographic order) and the two unequal sides.
    """

    identity_name: str
    parameter_point: dict
    passed: bool = True
    witness: Optional[dict] = field(default=None)

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report passes exactly when it carries no witness")

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_name,
            "parameters": to_jsonable(self.parameter_point),
            "passed": self.passed,
            "witness": None if self.witness is None else to_jsonable(self.witness),
        }


def make_report(name: str, point: dict, witness: Optional[dict]) -> VerificationReport:
    return VerificationReport(name, point, witness is None, witness)
