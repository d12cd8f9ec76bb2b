"""Exception types shared by all modules."""


class CrossnumError(Exception):
    pass


class DegenerateConfiguration(CrossnumError):
    """Raised for drawings outside general position (overlaps, duplicates)."""


class VertexOnEdge(DegenerateConfiguration):
    """A vertex lies strictly inside an edge it is not an endpoint of."""

    def __init__(self, vertex, edge):
        self.vertex = vertex
        self.edge = edge
        super().__init__(f"vertex {vertex} lies inside edge {edge}")


class DegenerateArc(CrossnumError):
    """Arc endpoints are equal/antipodal or two great circles coincide."""


class UnknownFamily(CrossnumError, ValueError):
    pass
