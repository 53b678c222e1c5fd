"""Exception types raised by the library."""

from __future__ import annotations


class TropicalError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class ParseError(TropicalError):
    pass


class DegenerateCycle(TropicalError):
    """The x+y+a4 region is not a proper hexagon, so the group law is undefined."""

    EDGE_NAMES = ("bottom", "lower-right", "right", "top", "upper-left", "left")

    def __init__(self, edge: int, length=None, reason: str | None = None):
        self.edge = edge
        self.length = length
        name = self.EDGE_NAMES[edge] if 0 <= edge < 6 else str(edge)
        if reason is None:
            reason = f"edge {edge} ({name}) has lattice length {length} <= 0"
        super().__init__(f"degenerate cycle: {reason}")


class NotOnCycle(TropicalError):
    def __init__(self, point, argmax=None):
        self.point = point
        self.argmax = argmax
        msg = f"point {point} is not on the cycle"
        if argmax is not None:
            terms = ", ".join(f"({i},{j})" for i, j in sorted(argmax))
            msg += f" (maximising terms: {{{terms}}})"
        super().__init__(msg)


class VertexOutsideRegion(TropicalError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"line vertex {vertex} is outside the x+y+a4 region")
