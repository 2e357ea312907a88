"""Frame-indexed tensors with coefficient-ring entries (ranks 0 to 4).

FrameTensor is the exchange type between the curvature layer (whose entries
are constant) and the vector-field layer (whose entries are ring functions).
Entries are RingElements; rational and integer scalars coerce transparently.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterator

from .errors import DimensionMismatch, GeometryError
from .ring import RingElement


def _coerce_entry(value, dim) -> RingElement:
    if isinstance(value, RingElement):
        if value.dim != dim:
            raise DimensionMismatch(f"entry over {value.dim} coordinates in dim-{dim} tensor")
        return value
    return RingElement.constant(dim, value)


class FrameTensor:
    """Immutable dense tensor over frame indices, entries in the ring."""

    __slots__ = ("dim", "rank", "_entries")

    def __init__(self, dim: int, rank: int, entries):
        if rank < 0 or rank > 4:
            raise GeometryError(f"rank must be between 0 and 4, got {rank}")
        size = dim ** rank
        entries = tuple(_coerce_entry(v, dim) for v in entries)
        if len(entries) != size:
            raise GeometryError(f"expected {size} entries for rank {rank}, got {len(entries)}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("FrameTensor is immutable")

    @classmethod
    def zeros(cls, dim: int, rank: int) -> "FrameTensor":
        return cls(dim, rank, [RingElement.zero(dim)] * (dim ** rank))

    @classmethod
    def from_nested(cls, dim: int, rank: int, nested) -> "FrameTensor":
        flat = []

        def walk(node, depth):
            if depth == rank:
                flat.append(node)
                return
            if len(node) != dim:
                raise GeometryError("nested entries do not match the frame dimension")
            for child in node:
                walk(child, depth + 1)

        walk(nested, 0)
        return cls(dim, rank, flat)

    def _offset(self, idx: tuple[int, ...]) -> int:
        if len(idx) != self.rank:
            raise GeometryError(f"rank-{self.rank} tensor indexed with {len(idx)} indices")
        offset = 0
        for i in idx:
            if not 0 <= i < self.dim:
                raise GeometryError(f"index {i} out of range for dim {self.dim}")
            offset = offset * self.dim + i
        return offset

    def __getitem__(self, idx) -> RingElement:
        if isinstance(idx, int):
            idx = (idx,)
        return self._entries[self._offset(tuple(idx))]

    def entries(self) -> Iterator[tuple[tuple[int, ...], RingElement]]:
        for idx in product(range(self.dim), repeat=self.rank):
            yield idx, self._entries[self._offset(idx)]

    # -- algebra -----------------------------------------------------------

    def _check_compatible(self, other: "FrameTensor"):
        if not isinstance(other, FrameTensor):
            raise GeometryError(f"cannot combine FrameTensor with {type(other).__name__}")
        if other.dim != self.dim or other.rank != self.rank:
            raise DimensionMismatch("tensors of different shape")

    def __add__(self, other) -> "FrameTensor":
        self._check_compatible(other)
        return FrameTensor(self.dim, self.rank,
                           [a + b for a, b in zip(self._entries, other._entries)])

    def __sub__(self, other) -> "FrameTensor":
        self._check_compatible(other)
        return FrameTensor(self.dim, self.rank,
                           [a - b for a, b in zip(self._entries, other._entries)])

    def __neg__(self) -> "FrameTensor":
        return FrameTensor(self.dim, self.rank, [-a for a in self._entries])

    def scale(self, scalar) -> "FrameTensor":
        scalar = _coerce_entry(scalar, self.dim)
        return FrameTensor(self.dim, self.rank, [scalar * a for a in self._entries])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrameTensor):
            return NotImplemented
        return (self.dim, self.rank, self._entries) == (other.dim, other.rank, other._entries)

    def __hash__(self):
        return hash((self.dim, self.rank, self._entries))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self._entries)

    def is_symmetric(self) -> bool:
        if self.rank != 2:
            raise GeometryError("symmetry is defined for rank-2 tensors")
        return all(self[i, j] == self[j, i] for i in range(self.dim) for j in range(self.dim))

    def g_trace(self, spec) -> RingElement:
        """Metric trace of a rank-2 tensor: sum_ij ginv[i][j] T[i][j]."""
        if self.rank != 2:
            raise GeometryError("metric trace is defined for rank-2 tensors")
        ginv = spec.metric_inverse
        total = RingElement.zero(self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                total = total + self[i, j] * ginv[i][j]
        return total


def metric_tensor(spec) -> FrameTensor:
    return FrameTensor(spec.dim, 2, [v for row in spec.metric for v in row])


def eta_outer(spec) -> FrameTensor:
    eta = spec.eta
    return FrameTensor(spec.dim, 2,
                       [eta[i] * eta[j] for i in range(spec.dim) for j in range(spec.dim)])


def from_rational_rank2(dim: int, matrix) -> FrameTensor:
    return FrameTensor(dim, 2, [Fraction(v) for row in matrix for v in row])


def from_rational_rank4(dim: int, nested) -> FrameTensor:
    flat = [Fraction(v)
            for plane in nested for mat in plane for row in mat for v in row]
    return FrameTensor(dim, 4, flat)
