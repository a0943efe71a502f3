"""
例外類別
"""
from typing import Optional, Sequence, Tuple


class GraphValidationError(ValueError):
    """Invalid vertex count or edge list; `edge` names the offending pair."""

    def __init__(self, message: str, edge: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.edge = edge


class EdgeListParseError(ValueError):
    """Malformed edge-list text; `line_no` is 1-based."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        if line_no is not None:
            message = f"{message} at line {line_no}"
        super().__init__(message)
        self.line_no = line_no


class DisconnectedGraphError(ValueError):
    """Connected input required; `components` lists vertex sets."""

    def __init__(self, components: Sequence[Sequence[int]]):
        self.components = [sorted(c) for c in components]
        super().__init__(f"graph is disconnected, components: {self.components}")


class NotApplicableError(ValueError):
    """Operation precondition not met (e.g. bipartite input, bounds too small)."""


class DimensionMismatchError(ValueError):
    pass


class ResourceGuardError(ValueError):
    """Requested size exceeds a hard guard."""

    def __init__(self, message: str, limit: Optional[int] = None):
        super().__init__(message)
        self.limit = limit


class InternalConsistencyError(RuntimeError):
    """A computed value contradicts a proven invariant; signals a bug."""
