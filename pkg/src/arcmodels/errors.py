"""Exception hierarchy.

Every error carries a machine-readable ``code`` and an optional ``location``
so the CLI can turn it into a ``{code, message, location}`` record and pick
an exit status from ``exit_code``.
"""

from __future__ import annotations


class ArcModelsError(Exception):
    code = "Error"
    exit_code = 1

    def __init__(self, message: str = "", location=None):
        super().__init__(message)
        self.message = message
        self.location = location

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "location": self.location}


# -- input / schema problems (exit 2) -------------------------------------

class InputError(ArcModelsError):
    code = "InputError"
    exit_code = 2


class PolySyntaxError(InputError):
    """Raised by the polynomial parser; ``location`` is the character offset."""

    code = "SyntaxError"

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}", location=position)
        self.position = position
        self.text = text


class UnknownVariable(InputError):
    code = "UnknownVariable"


class DivisionByZeroCoefficient(InputError):
    code = "DivisionByZeroCoefficient"


class SchemaError(InputError):
    code = "SchemaError"


# -- mathematical preconditions (exit 3) ----------------------------------

class PreconditionError(ArcModelsError):
    code = "PreconditionError"
    exit_code = 3


class DomainMismatch(PreconditionError):
    code = "DomainMismatch"


class NotSquare(PreconditionError):
    code = "NotSquare"


class NotNilpotent(PreconditionError):
    code = "NotNilpotent"


class NotInvertible(PreconditionError):
    code = "NotInvertible"


class ResidueOrderUndetectable(PreconditionError):
    code = "ResidueOrderUndetectable"


class PrecisionExhausted(PreconditionError):
    code = "PrecisionExhausted"


class NotOnStratum(PreconditionError):
    code = "NotOnStratum"


class NoFiniteMinor(PreconditionError):
    code = "NoFiniteMinor"


class PointNotOnVariety(PreconditionError):
    code = "PointNotOnVariety"


class MissingComponentData(PreconditionError):
    code = "MissingComponentData"


class InconsistentComponents(PreconditionError):
    """Supplied component data does not contain the ideal or misses the point."""

    code = "InconsistentComponents"


# -- resource limits (exit 4) ---------------------------------------------

class ResourceLimit(ArcModelsError):
    code = "ResourceLimit"
    exit_code = 4


# -- bug traps (exit 5) ---------------------------------------------------

class BoundViolated(ArcModelsError):
    code = "BoundViolated"
    exit_code = 5


class DefectNotContracting(ArcModelsError):
    code = "DefectNotContracting"
    exit_code = 5
