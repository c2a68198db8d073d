#!/usr/bin/env python3
"""
Exception Hierarchy - shared error types
========================================

Every failure raised by the engine derives from ``GCAError`` so callers
(most importantly the command line front end) can separate mathematical
misuse from programming bugs with a single ``except`` clause.
"""

from typing import Optional


class GCAError(Exception):
    """Base class for all engine errors."""


class ScalarError(GCAError):
    """Invalid scalar operation, e.g. division by zero."""


class ArityError(GCAError):
    """Vectors of different arity were combined."""


class ModuleSpecError(GCAError):
    """Module parameters violate the family's requirements (λ = 0, σ = 0, ...)."""


class UndefinedActionError(GCAError):
    """A generator kind was applied to a family on which it is not defined."""


class DegreeError(GCAError):
    """Degree requested for a vector that has none, or nothing left to reduce."""


class ReductionError(GCAError):
    """No admissible index produced the expected degree drop."""


class HypothesisViolation(GCAError):
    """An operation was called outside its theorem's hypotheses."""


class ConfigError(GCAError):
    """Malformed environment setting or configuration file."""


class ExprSyntaxError(GCAError):
    """
    Parse failure in the expression language.

    Attributes:
        offset: Byte offset in the source text where the error was detected
    """

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class ClosureInputError(GCAError):
    """Invalid seeds or bounds passed to the closure engine."""
