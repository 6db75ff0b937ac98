"""Exception types raised by the library.

Every error carries a short ``kind`` used by the CLI for its one-line
diagnostics, and most carry a ``witness`` describing the offending data.
"""

from __future__ import annotations

from typing import Any


class CDLatError(Exception):
    kind = "Error"

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class NotAGroup(CDLatError):
    kind = "NotAGroup"


class SizeGuard(CDLatError):
    """A configured size bound was exceeded; no partial result is returned."""

    kind = "SizeGuard"


class BudgetExceeded(SizeGuard):
    kind = "BudgetExceeded"


class InvalidSpec(CDLatError):
    kind = "InvalidSpec"


class InvalidZMParameters(InvalidSpec):
    kind = "InvalidZMParameters"


class NotCoprime(InvalidSpec):
    kind = "NotCoprime"


class NotCoprimeOrders(InvalidSpec):
    kind = "NotCoprimeOrders"


class InvalidAction(InvalidSpec):
    kind = "InvalidAction"


class InvalidLambda(InvalidSpec):
    kind = "InvalidLambda"


class NotAbelian(InvalidSpec):
    kind = "NotAbelian"


class NotNormal(InvalidSpec):
    kind = "NotNormal"


class NotAComplement(InvalidSpec):
    kind = "NotAComplement"


class ActionNotFaithful(InvalidSpec):
    kind = "ActionNotFaithful"


class NotPGroup(InvalidSpec):
    kind = "NotPGroup"


class NotIndexP(InvalidSpec):
    kind = "NotIndexP"


class DivisionByZero(CDLatError, ZeroDivisionError):
    kind = "DivisionByZero"
