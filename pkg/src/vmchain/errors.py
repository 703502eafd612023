"""Exception hierarchy shared by every module."""

from __future__ import annotations


class VmchainError(Exception):
    """Base class for all library errors."""


class ArgumentError(VmchainError, ValueError):
    """A vertex, set or option is out of range or malformed."""


class PreconditionError(VmchainError):
    """The input does not satisfy the operation's precondition.

    ``witness`` optionally carries the data that shows why (for example a
    violating vertex mask).
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedError(VmchainError):
    """The operation is undefined for this input (e.g. G/v on isolated v)."""


class ResourceLimitError(VmchainError):
    """A search exceeded its cap. Never means "no" or "false"."""

    def __init__(self, message: str, explored: int = 0):
        super().__init__(message)
        self.explored = explored


class GenerationError(VmchainError):
    """Rejection sampling ran out of attempts."""

    def __init__(self, message: str, rejects: int):
        super().__init__(message)
        self.rejects = rejects


class GraphParseError(VmchainError, ValueError):
    """Malformed graph6 or edge-list input; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class TheoremViolation(VmchainError):
    """A search came back empty inside a regime where a theorem guarantees success.

    Carries the offending graph in graph6 and the full trial log so the event
    can be reproduced.
    """

    def __init__(self, message: str, graph6: str, trial_log: list):
        super().__init__(message)
        self.graph6 = graph6
        self.trial_log = trial_log

    def to_dict(self) -> dict:
        return {
            "event": "theorem_violation",
            "message": str(self),
            "graph6": self.graph6,
            "trial_log": self.trial_log,
        }
