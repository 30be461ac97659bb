"""Exception types raised across the package."""


class UclabError(Exception):
    """Base class for every error raised by uclab."""


class AlgebraError(UclabError, ValueError):
    """Invalid algebra description, or operands from different algebras."""


class CapError(UclabError, ValueError):
    """An exhaustive operation was asked to run above its size cap."""


class NotAGrillError(UclabError, ValueError):
    pass


class NonAtomError(UclabError, ValueError):
    pass


class PreconditionError(UclabError, ValueError):
    pass


class AxiomViolation(UclabError):
    """A structure fails one of its defining axioms.

    ``axiom`` names the failed axiom (``"K3"``, ``"SS4"``, ``"C2"``, ...) and
    ``witnesses`` maps role names to the offending values.
    """

    def __init__(self, axiom, message, **witnesses):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.message = message
        self.witnesses = witnesses
