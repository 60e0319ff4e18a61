"""Exception hierarchy shared by the core modules, tools and surfaces."""

from typing import Optional


class FourModeError(Exception):
    """Root of every error raised by the toolkit."""


class InvalidArgumentError(FourModeError, ValueError):
    """An argument is outside the domain of the operation."""


class InvalidStateError(InvalidArgumentError):
    """A state vector is not normalized."""


class InvalidCoordinatesError(InvalidArgumentError):
    """Hopf coordinates do not lie on the cone."""


class DegenerateInputError(InvalidArgumentError):
    """Input is degenerate (e.g. xi0 <= 0) for the requested inversion."""


class NotInvertibleAsLadderError(InvalidArgumentError):
    """Coordinates with xi3 != 0 have no ladder representative."""


class InvalidPairError(InvalidArgumentError):
    """An odd pair (or triple) violates the Euclid generator conditions."""


class DegenerateSectorError(FourModeError):
    """Levels 1 and 3 are dynamically disconnected (xi1 = xi3 = 0).

    The closed-form prefactor is 0/0 here, but the amplitudes themselves are
    well defined and are carried on the exception.
    """

    def __init__(self, message: str, a1: Optional[object] = None, a3: Optional[object] = None):
        super().__init__(message)
        self.a1 = a1
        self.a3 = a3


class NoDynamicsError(FourModeError):
    """All couplings vanish, so no transfer time exists."""


class NumericalFailureError(FourModeError, ArithmeticError):
    """A numerical routine failed to converge or to verify."""
