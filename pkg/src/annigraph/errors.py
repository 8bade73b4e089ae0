class AnnigraphError(Exception):
    """Base class for all errors raised by annigraph."""


class ParseError(AnnigraphError, ValueError):
    pass


class DomainError(AnnigraphError, ValueError):
    pass


class InputError(AnnigraphError, ValueError):
    pass


class GraphSizeError(AnnigraphError):
    def __init__(self, vertex_count: int, cap: int):
        super().__init__(
            f"graph would have {vertex_count} vertices, above the cap of {cap}"
        )
        self.vertex_count = vertex_count
        self.cap = cap
