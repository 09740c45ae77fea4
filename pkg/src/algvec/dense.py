"""Dense tuples over index range 1..N and the bridge to sparse vectors.

The dense representation stores every coordinate, zeros included, and is
the independent oracle for the sparse arithmetic: ``to_dense`` /
``from_dense`` form a bijection (for supports inside 1..N) that preserves
addition and scalar multiplication, and the dense operations are plain
entrywise field arithmetic with nothing shared with the sparse merge.
"""

from .errors import DimensionMismatch, IncompatibleInput, OutOfRangeIndex
from .vector import AlgebraicVector

__all__ = ["DenseVector", "to_dense", "from_dense"]


class DenseVector:
    """Fixed-length coefficient tuple; entry i holds the coordinate at i+1."""

    __slots__ = ("_field", "_entries")

    def __init__(self, field, entries):
        entries = tuple(field.element(e) for e in entries)
        object.__setattr__(self, "_field", field)
        object.__setattr__(self, "_entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("DenseVector is immutable")

    @classmethod
    def _raw(cls, field, entries):
        # Internal: entries are already validated field elements.
        self = object.__new__(cls)
        object.__setattr__(self, "_field", field)
        object.__setattr__(self, "_entries", entries)
        return self

    @classmethod
    def zeros(cls, field, dim):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        return cls._raw(field, (field.zero(),) * dim)

    @property
    def field(self):
        return self._field

    @property
    def dim(self):
        return len(self._entries)

    @property
    def entries(self):
        return self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __add__(self, other):
        if not isinstance(other, DenseVector):
            return NotImplemented
        f = self._field
        if other._field is not f:
            raise IncompatibleInput(
                f"cannot add dense vector over {other._field.name} to {f.name}"
            )
        if len(self._entries) != len(other._entries):
            raise DimensionMismatch(
                f"dims differ: {len(self._entries)} vs {len(other._entries)}"
            )
        add = f.add
        return DenseVector._raw(
            f, tuple(add(a, b) for a, b in zip(self._entries, other._entries))
        )

    def scale(self, scalar):
        f = self._field
        scalar = f.element(scalar)
        mul = f.mul
        return DenseVector._raw(f, tuple(mul(scalar, e) for e in self._entries))

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DenseVector):
            return NotImplemented
        return self._field is other._field and self._entries == other._entries

    def __hash__(self):
        return hash((id(self._field), self._entries))

    def __repr__(self):
        return f"DenseVector({self._field.name}, {list(self._entries)!r})"


def to_dense(vector, dim):
    """Coordinates of an int-indexed sparse vector as a dense dim-tuple.

    Every support label must lie in 1..dim, else OutOfRangeIndex.
    """
    f = vector.field
    entries = [f.zero()] * dim
    for label, coeff in vector:
        if type(label) is not int:
            raise IncompatibleInput(f"dense bridge needs int labels, got {label!r}")
        if not 1 <= label <= dim:
            raise OutOfRangeIndex(f"label {label} outside 1..{dim}")
        entries[label - 1] = coeff
    return DenseVector._raw(f, tuple(entries))


def from_dense(dense):
    """Sparse vector with support at the nonzero positions of ``dense``."""
    f = dense.field
    pairs = []
    for pos, entry in enumerate(dense, start=1):
        if not f.is_zero(entry):
            pairs.append((pos, entry))
    return AlgebraicVector._raw(
        f,
        tuple(label for label, _ in pairs),
        tuple(coeff for _, coeff in pairs),
    )
