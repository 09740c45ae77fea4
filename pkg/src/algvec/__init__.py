"""Sparse vectors over pluggable fields and totally-ordered index sets.

A vector is stored as its support (the sorted labels with nonzero
coefficients) paired with those coefficients; the zero vector is the empty
pair.  Works over exact rationals, binary64 floats, or complex rationals,
with int, text, real, or lexicographically-ordered complex index labels,
and bridges losslessly to the classical dense tuple representation.
"""

from .errors import (
    AlgvecError,
    DimensionMismatch,
    ExactFieldPrune,
    IncompatibleIndexKind,
    IncompatibleInput,
    InvalidScenario,
    OutOfRangeIndex,
    VectorSyntaxError,
)
from .fields import (
    COMPLEX_RATIONAL,
    FIELDS,
    FLOAT64,
    RATIONAL,
    ComplexRational,
    Field,
)
from .indexes import COMPLEX, INT, KINDS, REAL, TEXT, ComplexLabel, compare, kind_of
from .vector import AlgebraicVector, einstein_expand
from .dense import DenseVector, from_dense, to_dense
from .textio import format_vector, parse_vector, read_vectors, write_vectors

__version__ = "0.1.0"

__all__ = [
    "AlgebraicVector",
    "DenseVector",
    "einstein_expand",
    "to_dense",
    "from_dense",
    "format_vector",
    "parse_vector",
    "read_vectors",
    "write_vectors",
    "Field",
    "ComplexRational",
    "RATIONAL",
    "FLOAT64",
    "COMPLEX_RATIONAL",
    "FIELDS",
    "ComplexLabel",
    "compare",
    "kind_of",
    "INT",
    "TEXT",
    "REAL",
    "COMPLEX",
    "KINDS",
    "AlgvecError",
    "IncompatibleInput",
    "IncompatibleIndexKind",
    "ExactFieldPrune",
    "OutOfRangeIndex",
    "DimensionMismatch",
    "VectorSyntaxError",
    "InvalidScenario",
    "__version__",
]
