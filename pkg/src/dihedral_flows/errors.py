"""Exception hierarchy shared by every module of the package."""


class DflowError(Exception):
    """Base class for all package errors."""


class ParseError(DflowError, ValueError):
    """Malformed graph, flow, coloring or element text."""


class OutOfRange(DflowError, ArithmeticError):
    """A product left the bounded set of shifts ``|a| < n``."""


class ComplexityGuard(DflowError):
    """A search space exceeds the configured budget."""


class InvalidGraph(DflowError, ValueError):
    """An embedded graph violates a structural invariant."""


class NonContractible(DflowError):
    """A cycle does not bound a disk."""


class ReflectionInInterior(DflowError):
    """A flow carries a reflection strictly inside the disk of a cycle."""


class NotAReflectionCycle(DflowError):
    """Some edge of a supposed reflection cycle carries a rotation."""


class StructureViolation(DflowError):
    """Reflection edges of a flow on a cubic graph are not 2-regular."""


class InvalidFlow(DflowError, ValueError):
    """An input flow does not satisfy Kirchhoff's law or its context."""


class Blocked(DflowError):
    """The reduction to a rotation-only flow cannot proceed.

    ``reason`` is one of ``"non-contractible"``, ``"contains-all-reflections"``
    or ``"not-simple"``; ``cycle`` holds the offending edge ids.
    """

    def __init__(self, cycle, reason):
        self.cycle = tuple(cycle)
        self.reason = reason
        super().__init__(f"blocked on cycle {list(self.cycle)}: {reason}")


class NotCubic(DflowError, ValueError):
    pass


class NotSpecial(DflowError):
    """A 4-edge coloring is not special; ``pair`` names the offending vertices."""

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class NoFeasibleZ(DflowError):
    pass


class NotAlmostHamiltonian(DflowError):
    pass


class NotSimpleVertex(DflowError):
    pass


class MissedColorClash(DflowError):
    pass
