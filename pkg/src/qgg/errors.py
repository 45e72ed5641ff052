"""Exception taxonomy shared across the package.

Usage errors (bad files, bad preconditions) map to CLI exit code 2.
A :class:`Falsification` means a computed ground truth disagreed with a
closed-form prediction; it maps to exit code 1 and is always surfaced
with a serialized witness graph.
"""

from __future__ import annotations


class QggError(Exception):
    """Base class for all package errors."""


class FormatError(QggError):
    """Malformed or invalid qgg v1 input (syntax, duplicate edge, non-unit gain)."""


class NotACycleError(QggError):
    """A vertex sequence handed to a cycle operation is not a cycle of the graph."""


class DisconnectedGraphError(QggError):
    """Operation requires a connected graph."""


class AcyclicGraphError(QggError):
    """Operation requires a graph containing at least one cycle."""


class WrongFamilyError(QggError):
    """Graph does not belong to the structural family the operation expects."""


class PendantTwinsError(QggError):
    """Graph still contains pendant twins where none are allowed."""


class ParityMismatchError(QggError):
    """Cycle type is inconsistent with the parity of the cycle length."""


class AdjointParityError(QggError):
    """Complex rank of an adjoint came out odd: a numerical tolerance failure."""


class OracleDisagreement(QggError):
    """The elimination and adjoint rank routes returned different values."""


class AmbiguousTypeError(QggError):
    """Float-tower cycle type decision fell into the ambiguous tolerance band."""


class Falsification(QggError):
    """A verifier found a counterexample to a closed-form prediction.

    Attributes:
        detail: human-readable description of the disagreement.
        witness_text: the offending gain graph in qgg v1 format, if any.
    """

    def __init__(self, detail: str, witness_text: str | None = None):
        super().__init__(detail)
        self.detail = detail
        self.witness_text = witness_text
