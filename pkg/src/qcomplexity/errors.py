"""Exception types shared across the package."""


class ContractViolationError(ValueError):
    """An input violates a documented precondition or invariant."""


class ReducibleMachineError(ContractViolationError):
    """The machine has more than one recurrent class, so no unique
    stationary distribution exists."""


class MachineFormatError(ValueError):
    """A machine file or document does not follow the expected schema."""
