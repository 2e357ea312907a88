"""Exception hierarchy shared by all framegeom modules."""


class GeometryError(Exception):
    """Base class for every error raised by framegeom."""


class DimensionMismatch(GeometryError):
    """Operands defined over different frame dimensions."""


class StructureError(GeometryError):
    """A manifold description violates a structural invariant.

    The message names the violated invariant and, where useful, the first
    offending index tuple.
    """


class RingError(GeometryError):
    """Invalid operation on a coefficient-ring element."""


class DocumentError(GeometryError):
    """A manifold document failed to parse or validate.

    ``path`` locates the offending entry inside the JSON document, e.g.
    ``structure_constants[3].value``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
