"""Scalar arithmetic domains.

A Field instance bundles the arithmetic, the zero test, and the text syntax
for one coefficient domain.  Every vector carries exactly one Field and all
of its coefficients belong to it; the field object is the single authority
for coefficient arithmetic, which lets instrumentation wrap a field without
touching the vector code.

Three concrete fields ship:

* ``RATIONAL`` -- arbitrary-precision rationals (``fractions.Fraction``),
  always in canonical reduced form.
* ``FLOAT64`` -- IEEE binary64.  Not an exact field: only the identity and
  inverse-up-to-rounding laws are guaranteed; associativity and
  distributivity are NOT (and are deliberately never asserted in tests).
  The zero test is exact comparison with 0.0, no epsilon.
* ``COMPLEX_RATIONAL`` -- pairs of canonical rationals, a second exact
  field for exercising genericity.

Fields compare by identity: use the module-level singletons.
"""

import math
import re
from fractions import Fraction

from .errors import IncompatibleInput

__all__ = [
    "Field",
    "RationalField",
    "Float64Field",
    "ComplexRational",
    "ComplexRationalField",
    "RATIONAL",
    "FLOAT64",
    "COMPLEX_RATIONAL",
    "FIELDS",
]


class Field:
    """One arithmetic domain.  Subclasses define the element type."""

    name = "abstract"
    exact = True

    def element(self, value):
        """Coerce ``value`` into this field; raise IncompatibleInput if alien."""
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        raise NotImplementedError

    def is_zero(self, a):
        raise NotImplementedError

    def parse(self, text):
        """Parse one coefficient literal; raises ValueError on bad syntax."""
        raise NotImplementedError

    def format(self, a):
        """Canonical literal; ``parse(format(a))`` recovers ``a`` exactly."""
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.name}>"


_RATIONAL_RE = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?\Z")


class RationalField(Field):
    """Exact rationals backed by fractions.Fraction.

    Fraction already maintains the canonical form (gcd 1, positive
    denominator, zero as 0/1); add/mul short-circuit on zero operands so a
    dense scan over mostly-zero data does not pay the gcd machinery.
    """

    name = "rational"
    exact = True

    def element(self, value):
        if type(value) is Fraction:
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise IncompatibleInput(f"not a rational: {value!r}")

    def zero(self):
        return _FRACTION_ZERO

    def one(self):
        return _FRACTION_ONE

    def add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        return a + b

    def mul(self, a, b):
        if not a or not b:
            return _FRACTION_ZERO
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return _FRACTION_ONE / a  # ZeroDivisionError on zero

    def is_zero(self, a):
        return not a

    def parse(self, text):
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"bad rational literal {text!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None

    def format(self, a):
        return str(a)


_FRACTION_ZERO = Fraction(0)
_FRACTION_ONE = Fraction(1)


class Float64Field(Field):
    """IEEE binary64 with non-finite values rejected at the boundary.

    Arithmetic can still overflow to infinity; construction-time rejection
    guards inputs, not results.  Pruning tiny magnitudes is the caller's
    job (AlgebraicVector.prune_below).
    """

    name = "f64"
    exact = False

    def element(self, value):
        if isinstance(value, float):
            x = value
        elif isinstance(value, int) and not isinstance(value, bool):
            x = float(value)
        elif isinstance(value, str):
            return self.parse(value)
        else:
            raise IncompatibleInput(f"not a float: {value!r}")
        if not math.isfinite(x):
            raise IncompatibleInput(f"non-finite float rejected: {value!r}")
        return x

    def zero(self):
        return 0.0

    def one(self):
        return 1.0

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1.0 / a

    def is_zero(self, a):
        return a == 0.0

    def parse(self, text):
        x = float(text)  # ValueError on bad syntax
        if not math.isfinite(x):
            raise ValueError(f"non-finite float literal {text!r}")
        return x

    def format(self, a):
        return repr(a)  # shortest round-trip decimal


class ComplexRational:
    """a + b*i with canonical rational parts.  Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    def __add__(self, other):
        if not isinstance(other, ComplexRational):
            return NotImplemented
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __mul__(self, other):
        if not isinstance(other, ComplexRational):
            return NotImplemented
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, ComplexRational):
            return NotImplemented
        return ComplexRational(self.re - other.re, self.im - other.im)

    def inverse(self):
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of complex zero")
        return ComplexRational(self.re / norm, -self.im / norm)

    def __eq__(self, other):
        if not isinstance(other, ComplexRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"ComplexRational({self.re}, {self.im})"


class ComplexRationalField(Field):
    name = "complex-rational"
    exact = True

    def element(self, value):
        if isinstance(value, ComplexRational):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return ComplexRational(value)
        if isinstance(value, str):
            return self.parse(value)
        raise IncompatibleInput(f"not a complex rational: {value!r}")

    def zero(self):
        return _COMPLEX_ZERO

    def one(self):
        return _COMPLEX_ONE

    def add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        return a + b

    def mul(self, a, b):
        if not a or not b:
            return _COMPLEX_ZERO
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a):
        return not a

    def parse(self, text):
        """Parse ``[re][(+|-)im]i`` literals: "1/2-3/4i", "5", "-2i", "i"."""
        def rational(part):
            if not _RATIONAL_RE.match(part):
                raise ValueError(f"bad complex rational literal {text!r}")
            try:
                return Fraction(part)
            except ZeroDivisionError:
                raise ValueError(f"zero denominator in {text!r}") from None

        if not text:
            raise ValueError("empty complex rational literal")
        if not text.endswith("i"):
            return ComplexRational(rational(text))
        body = text[:-1]
        # Rationals carry no exponent, so a +/- past position 0 can only
        # separate the real part from the signed imaginary part.
        split = max(body.rfind("+", 1), body.rfind("-", 1))
        if split == -1:
            re_val = Fraction(0)
            im_text = body
        else:
            re_val = rational(body[:split])
            im_text = body[split:]
        if im_text in ("", "+"):
            im_val = Fraction(1)
        elif im_text == "-":
            im_val = Fraction(-1)
        else:
            im_val = rational(im_text)
        return ComplexRational(re_val, im_val)

    def format(self, a):
        if not a.im:
            return str(a.re)
        if not a.re:
            return f"{a.im}i"
        sign = "+" if a.im > 0 else "-"
        return f"{a.re}{sign}{abs(a.im)}i"


_COMPLEX_ZERO = ComplexRational(0, 0)
_COMPLEX_ONE = ComplexRational(1, 0)


RATIONAL = RationalField()
FLOAT64 = Float64Field()
COMPLEX_RATIONAL = ComplexRationalField()

FIELDS = {f.name: f for f in (RATIONAL, FLOAT64, COMPLEX_RATIONAL)}
