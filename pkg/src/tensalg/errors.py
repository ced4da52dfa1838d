"""Exception types raised by validators and constructors.

Every validation error carries a human-readable message plus a ``witness``
attribute holding the offending indices, so callers can report the exact
cell of a table that broke an axiom.
"""

from __future__ import annotations


class TensalgError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


# lattice layer

class NotAPartialOrder(TensalgError):
    pass


class MissingJoin(TensalgError):
    pass


class SizeLimitExceeded(TensalgError):
    pass


# quantale layer

class NotAssociative(TensalgError):
    pass


class NotJoinDistributive(TensalgError):
    pass


class UnitLawFails(TensalgError):
    pass


# module layer

class ActionNotJoinPreserving(TensalgError):
    pass


class ActionNotAssociative(TensalgError):
    pass


class UnitActionFails(TensalgError):
    pass


class SourceTargetQuantaleMismatch(TensalgError):
    pass


# frames and operator semilattices

class QuantaleMismatch(TensalgError):
    pass


class BadElementIndex(TensalgError):
    pass


class CompositionMismatch(TensalgError):
    pass


class FNotModuleHom(TensalgError):
    pass


class NonCommutativeBase(TensalgError):
    pass


# nuclei and congruences

class NotAPrenucleus(TensalgError):
    pass


class NotANucleus(TensalgError):
    pass


class NotACongruence(TensalgError):
    pass


class GDoesNotRespectX(TensalgError):
    pass


# workspace / CLI layer

class ParseError(TensalgError):
    pass


class UnknownReference(TensalgError):
    pass


class ValidationError(TensalgError):
    pass


class BudgetExceeded(SizeLimitExceeded):
    """An enumeration or construction blew past a configured search budget."""
