"""Exception hierarchy.

``DomainError`` marks invalid input (command line exit status 3), ``EngineError`` marks an
internal inconsistency that should never happen, ``BudgetExceeded`` carries a partial result.
"""

from typing import Any


class NakayamaError(Exception):
    """Base class for all package errors."""


class DomainError(NakayamaError, ValueError):
    """Input outside the domain of an operation."""


class RelationTooShort(DomainError):
    """A relation path has fewer than two arrows."""


class RelationOutOfRange(DomainError):
    """A relation path leaves the vertex range."""


class RedundantRelation(DomainError):
    """One relation path contains another."""


class IndexOutOfRange(DomainError):
    """A vertex index or interval lies outside 1..n."""


class QuotientTooLong(DomainError):
    """Requested quotient length exceeds the Loewy length of the projective."""


class InvalidModule(DomainError):
    """An interval that is not a module over the algebra."""


class NonComposable(DomainError):
    """Canonical maps whose target and source disagree."""


class ZeroModule(DomainError):
    """Operation undefined on the zero module."""


class InconsistentRep(DomainError):
    """Representation matrices do not match the vertex dimensions."""


class WrongKind(DomainError):
    """Complex or module of the wrong kind for the operation."""


class HomViolation(DomainError):
    """Nonzero scalar placed where the Hom space vanishes."""


class NotSquareZero(DomainError):
    """Consecutive differentials do not compose to zero."""


class KindMismatch(DomainError):
    """Complexes over different algebras or of different kinds were combined."""


class NotIndecomposable(DomainError):
    """An indecomposable complex was required."""


class NotApplicable(DomainError):
    """Statement does not apply to the given vertex."""


class ZeroMap(DomainError):
    """A nonzero map was required."""


class UnknownAlias(DomainError):
    """A module or complex expression could not be resolved."""


class ExpressionSyntaxError(UnknownAlias):
    """A module or complex expression is malformed (command line exit status 2)."""


class ComponentOpen(DomainError):
    """Report requested for a component that is not closed under the shift."""


class AlgebraFileError(NakayamaError):
    """Malformed algebra file or preset."""


class EngineError(NakayamaError, RuntimeError):
    """Internal inconsistency; indicates a bug rather than bad input."""


class DecompositionFailure(EngineError):
    """No idempotent found or idempotent lifting did not converge."""


class SocleDimensionError(EngineError):
    """Solution space for the connecting map is not one-dimensional."""


class LiftFailure(EngineError):
    """Linear system for a lifted chain map had no solution."""


class HomologyMismatch(EngineError):
    """A transformation changed homology."""


class BudgetExceeded(NakayamaError):
    """Knitting stopped before closure; ``partial`` holds the component built so far."""

    def __init__(self, message: str, partial: Any = None) -> None:
        super().__init__(message)
        self.partial = partial
