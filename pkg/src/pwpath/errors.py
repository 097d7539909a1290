"""Exceptions raised by pwpath."""


class PwPathError(Exception):
    """Base class for pwpath errors."""


class TopologyError(PwPathError, ValueError):
    """A topology or path document is malformed or violates the network model."""


class InvalidTransitionError(PwPathError, ValueError):
    """Two consecutive trace symbols match no adaptation rule."""


class NoMatchingPathError(PwPathError):
    """A trace accepted by the automaton could not be mapped back to the network."""


class BoundExceededError(PwPathError):
    """The oracle search was truncated before it could reach a conclusion."""

    def __init__(self, message: str, explored: int = 0):
        super().__init__(message)
        self.explored = explored
