"""Exceptions raised by the workbench model"""


class WorkbenchError(Exception):
    """Base class for every workbench failure"""


class InvalidStructureError(WorkbenchError, ValueError):
    """Malformed signature, structure, map or class specification"""


class SignatureMismatchError(WorkbenchError, ValueError):
    """Operands are over different signatures"""


class DomainMismatchError(WorkbenchError, ValueError):
    """Operands have incompatible domain sizes"""


class FormulaSyntaxError(WorkbenchError, ValueError):
    """Formula text does not follow the grammar"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnboundVariableError(WorkbenchError, KeyError):
    """A free variable has no value in the valuation"""

    def __str__(self):
        return str(self.args[0]) if self.args else "unbound variable"


class ArityError(WorkbenchError, ValueError):
    """Relation atom does not fit the signature"""


class BudgetExceededError(WorkbenchError, RuntimeError):
    """A configured search budget or cap was exceeded"""


class NotAMemberError(WorkbenchError, ValueError):
    """Structure is not a member of the class"""


class NotAChainError(WorkbenchError, ValueError):
    """Family is not linearly ordered by inclusion"""


class PreconditionError(WorkbenchError, ValueError):
    """Input violates a checker precondition"""


class CharacterizationError(WorkbenchError, ValueError):
    """Structure does not have the shape a characterization promises"""


class NotDualizableError(WorkbenchError, ValueError):
    """Class specification has no complement dual"""


class SampledCensusError(WorkbenchError, ValueError):
    """Operation needs a complete census"""
