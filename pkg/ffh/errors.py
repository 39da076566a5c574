"""
Exception hierarchy for the Fueter-Funk-Hecke engine.

Every error derives from ``FFHError`` and from the builtin it specialises, so
callers may catch either ``FFHError`` or e.g. ``ValueError``.
"""

from typing import Any, Optional


class FFHError(Exception):
    """Base class for all engine errors."""


class InvalidBladeError(FFHError, ValueError):
    """Blade index out of range or not strictly increasing."""


class DimensionMismatchError(FFHError, ValueError):
    """Operands live in different algebras or variable layouts."""


class ScalarModeError(FFHError, TypeError):
    """Exact and floating-point scalars met inside one expression."""


class MixedPiPowerError(FFHError, ArithmeticError):
    """Sum of two ScalarExt values with different powers of pi."""


class UnknownVariableError(FFHError, ValueError):
    """Variable name not part of the polynomial's variable set."""


class DomainError(FFHError, ValueError):
    """Parameters outside the range where a construction is defined."""


class QuadratureError(FFHError, RuntimeError):
    """Quadrature rule construction failed."""


class StencilOutsideDomainError(FFHError, ValueError):
    """A finite-difference or quadrature point left the validity region."""


class ParseError(FFHError, ValueError):
    """Syntax error in the holomorphic or polynomial grammar."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class NotCartesianConvertible(FFHError, ValueError):
    """A radial sector term has no polynomial Cartesian counterpart."""

    def __init__(self, message: str, sector: str, term: Optional[Any] = None):
        self.sector = sector
        self.term = term
        super().__init__(f"not Cartesian-convertible ({sector} sector, term {term}): {message}")


class SphericalMonogenicError(FFHError, ValueError):
    """Structured rejection of a candidate spherical monogenic."""

    NOT_HOMOGENEOUS = "not-homogeneous"
    NOT_MONOGENIC = "not-monogenic"
    NOT_EVEN = "not-even"
    WRONG_BLOCK = "wrong-block"

    def __init__(self, reason: str, witness: str):
        self.reason = reason
        self.witness = witness
        super().__init__(f"{reason}: {witness}")
