"""Sparse vectors as canonical (support, coefficients) pairs.

An AlgebraicVector stores a strictly increasing tuple of index labels (the
support) and a parallel tuple of nonzero coefficients from one field.  The
zero vector is the empty pair.  This canonical form makes equality
structural and keeps every operation a single ordered scan:

* addition merges the two supports in one pass, summing coefficients on the
  overlap and dropping positions where the sum cancels to the field zero,
  so the cost is proportional to the two support sizes, never to any
  ambient dimension;
* scalar multiplication maps the coefficients and collapses to the zero
  vector when the scalar is zero.

Vectors are immutable; all operations return new vectors and are safe to
share across threads.
"""

from functools import cmp_to_key

from .errors import ExactFieldPrune, IncompatibleInput
from .indexes import compare, kind_of

__all__ = ["AlgebraicVector", "einstein_expand"]


class AlgebraicVector:
    """A vector with finite support over a totally-ordered index set.

    Construct with ``AlgebraicVector(field, pairs)`` where ``pairs`` is any
    iterable of (label, coefficient) tuples; duplicates are merged by field
    addition, zero coefficients are dropped, and the support is sorted.
    ``AlgebraicVector(field)`` is the zero vector.
    """

    __slots__ = ("_field", "_support", "_coeffs")

    def __init__(self, field, pairs=()):
        support, coeffs = _canonicalize(field, pairs)
        object.__setattr__(self, "_field", field)
        object.__setattr__(self, "_support", support)
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicVector is immutable")

    @classmethod
    def _raw(cls, field, support, coeffs):
        # Internal: trusts that support is strictly sorted and coeffs nonzero.
        self = object.__new__(cls)
        object.__setattr__(self, "_field", field)
        object.__setattr__(self, "_support", support)
        object.__setattr__(self, "_coeffs", coeffs)
        return self

    @classmethod
    def zero(cls, field):
        return cls._raw(field, (), ())

    @classmethod
    def basis(cls, field, label):
        """Standard basis vector at ``label``: support {label}, coefficient one."""
        kind_of(label)  # validate the label type up front
        return cls._raw(field, (label,), (field.one(),))

    @property
    def field(self):
        return self._field

    @property
    def support(self):
        """The index set: labels carrying nonzero coefficients, ascending."""
        return self._support

    @property
    def coefficients(self):
        return self._coeffs

    def __len__(self):
        return len(self._support)

    def __bool__(self):
        return bool(self._support)

    def __iter__(self):
        return iter(zip(self._support, self._coeffs))

    def _find(self, label):
        lo, hi = 0, len(self._support)
        while lo < hi:
            mid = (lo + hi) // 2
            c = compare(self._support[mid], label)
            if c == 0:
                return mid
            if c < 0:
                lo = mid + 1
            else:
                hi = mid
        return -1

    def component(self, label):
        """Coefficient at ``label``, or None when the label is off-support.

        The zero vector has no components at all; absence is a value here,
        not an error.  Use :meth:`coefficient_or_zero` for the embedding
        that fills absent positions with the field zero.
        """
        if not self._support:
            return None
        kind_of(label)
        pos = self._find(label)
        return None if pos < 0 else self._coeffs[pos]

    def coefficient_or_zero(self, label):
        value = self.component(label)
        return self._field.zero() if value is None else value

    def scale(self, scalar):
        """Scalar multiple; the zero scalar or zero vector yields zero."""
        f = self._field
        scalar = f.element(scalar)
        if f.is_zero(scalar) or not self._support:
            return AlgebraicVector._raw(f, (), ())
        support = []
        coeffs = []
        for label, c in zip(self._support, self._coeffs):
            m = f.mul(scalar, c)
            # A field has no zero divisors, but binary64 products can
            # underflow to 0.0; drop those to keep the canonical form.
            if not f.is_zero(m):
                support.append(label)
                coeffs.append(m)
        return AlgebraicVector._raw(f, tuple(support), tuple(coeffs))

    def __add__(self, other):
        if not isinstance(other, AlgebraicVector):
            return NotImplemented
        f = self._field
        if other._field is not f:
            raise IncompatibleInput(
                f"cannot add vector over {other._field.name} to vector over {f.name}"
            )
        sa, ca = self._support, self._coeffs
        sb, cb = other._support, other._coeffs
        if not sa:
            return other
        if not sb:
            return self
        support = []
        coeffs = []
        i = j = 0
        na, nb = len(sa), len(sb)
        while i < na and j < nb:
            c = compare(sa[i], sb[j])
            if c < 0:
                support.append(sa[i])
                coeffs.append(ca[i])
                i += 1
            elif c > 0:
                support.append(sb[j])
                coeffs.append(cb[j])
                j += 1
            else:
                s = f.add(ca[i], cb[j])
                # Cancelled positions leave the support entirely.
                if not f.is_zero(s):
                    support.append(sa[i])
                    coeffs.append(s)
                i += 1
                j += 1
        while i < na:
            support.append(sa[i])
            coeffs.append(ca[i])
            i += 1
        while j < nb:
            support.append(sb[j])
            coeffs.append(cb[j])
            j += 1
        return AlgebraicVector._raw(f, tuple(support), tuple(coeffs))

    def __neg__(self):
        return self.scale(self._field.neg(self._field.one()))

    def __sub__(self, other):
        if not isinstance(other, AlgebraicVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def prune_below(self, tol):
        """Drop entries with magnitude <= tol.  Float vectors only.

        Exact fields never need pruning, so calling this on one raises
        ExactFieldPrune; tol = 0 is the identity on canonical vectors.
        """
        if self._field.exact:
            raise ExactFieldPrune(f"prune_below on exact field {self._field.name}")
        tol = float(tol)
        if not tol >= 0.0:  # also rejects NaN
            raise ValueError("tolerance must be nonnegative")
        kept = [(l, c) for l, c in self if abs(c) > tol]
        if len(kept) == len(self._support):
            return self
        return AlgebraicVector._raw(
            self._field,
            tuple(l for l, _ in kept),
            tuple(c for _, c in kept),
        )

    def __eq__(self, other):
        if not isinstance(other, AlgebraicVector):
            return NotImplemented
        return (
            self._field is other._field
            and self._support == other._support
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((id(self._field), self._support, self._coeffs))

    def __repr__(self):
        if not self._support:
            return f"AlgebraicVector({self._field.name}, zero)"
        pairs = ", ".join(f"{l!r}: {c!r}" for l, c in self)
        return f"AlgebraicVector({self._field.name}, {{{pairs}}})"


def _canonicalize(field, pairs):
    """Sort by label, merge duplicates by field addition, drop zeros."""
    items = [(label, field.element(coeff)) for label, coeff in pairs]
    if not items:
        return (), ()
    kind = kind_of(items[0][0])
    for label, _ in items:
        if not kind.matches(label):
            raise IncompatibleInput(
                f"mixed index kinds: expected {kind.name}, got {label!r}"
            )
    items.sort(key=cmp_to_key(lambda a, b: compare(a[0], b[0])))
    support = []
    coeffs = []
    for label, coeff in items:
        if support and compare(support[-1], label) == 0:
            merged = field.add(coeffs[-1], coeff)
            if field.is_zero(merged):
                support.pop()
                coeffs.pop()
            else:
                coeffs[-1] = merged
        elif not field.is_zero(coeff):
            support.append(label)
            coeffs.append(coeff)
    return tuple(support), tuple(coeffs)


def einstein_expand(field, pairs):
    """Sum of scaled basis vectors, accumulated by repeated addition.

    Computes sum(coeff * e_label) one term at a time; the empty input sums
    to the zero vector.  For distinct labels and nonzero coefficients this
    agrees with the canonicalizing constructor, which builds the same
    vector in one sort-and-merge pass instead.
    """
    acc = AlgebraicVector.zero(field)
    for label, coeff in pairs:
        acc = acc + AlgebraicVector.basis(field, label).scale(coeff)
    return acc
