"""Totally-ordered index labels.

Labels are plain Python values -- ``int``, ``str``, ``float`` -- plus
``ComplexLabel`` for complex labels under lexicographic order (real part
first, imaginary part breaks ties).  Labels are opaque tags: no arithmetic
is ever performed on them, so float labels compare by exact value with no
tolerance, and non-finite floats are rejected so the order stays total.

``compare(a, b)`` returns -1, 0, or 1 (less, equal, greater) and raises
IncompatibleIndexKind when the two labels are of different kinds.
"""

import math
import re

from .errors import IncompatibleIndexKind

__all__ = [
    "ComplexLabel",
    "IndexKind",
    "INT",
    "TEXT",
    "REAL",
    "COMPLEX",
    "KINDS",
    "compare",
    "kind_of",
]

LESS, EQUAL, GREATER = -1, 0, 1


class ComplexLabel:
    """Complex index label ordered lexicographically by (re, im)."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0.0):
        re = float(re)
        im = float(im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise IncompatibleIndexKind("complex label parts must be finite")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexLabel is immutable")

    def __eq__(self, other):
        if not isinstance(other, ComplexLabel):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __lt__(self, other):
        if not isinstance(other, ComplexLabel):
            return NotImplemented
        return (self.re, self.im) < (other.re, other.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexLabel({self.re!r}, {self.im!r})"


class IndexKind:
    """One label kind: a type check plus the text syntax for that kind."""

    name = "abstract"

    def matches(self, label):
        raise NotImplementedError

    def parse(self, text):
        """Parse one label literal; raises ValueError on bad syntax."""
        raise NotImplementedError

    def format(self, label):
        raise NotImplementedError

    def __repr__(self):
        return f"<index kind {self.name}>"


_INT_RE = re.compile(r"[+-]?[0-9]+\Z")
# Float literal with optional exponent; no inf/nan keywords.
_FLOAT_RE = re.compile(r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?\Z")


class IntKind(IndexKind):
    name = "int"

    def matches(self, label):
        return type(label) is int

    def parse(self, text):
        if not _INT_RE.match(text):
            raise ValueError(f"bad int index {text!r}")
        return int(text)

    def format(self, label):
        return str(label)


class TextKind(IndexKind):
    name = "text"

    def matches(self, label):
        return type(label) is str

    def parse(self, text):
        # Quotes are stripped by the line tokenizer; here text is the body.
        if '"' in text:
            raise ValueError("text index may not contain a quote")
        return text

    def format(self, label):
        if '"' in label:
            raise ValueError("text index may not contain a quote")
        return f'"{label}"'


class RealKind(IndexKind):
    name = "real"

    def matches(self, label):
        return type(label) is float and math.isfinite(label)

    def parse(self, text):
        if not _FLOAT_RE.match(text):
            raise ValueError(f"bad real index {text!r}")
        return float(text)

    def format(self, label):
        return repr(label)


def _split_imaginary(body):
    """Split "re(+|-)im" at the sign separating the parts.

    Exponent signs are always preceded by e/E, which disambiguates them
    from the separator.  Returns (re_text, signed_im_text) where re_text
    may be "" for a pure-imaginary literal.
    """
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "eE":
            return body[:pos], body[pos:]
    return "", body


class ComplexKind(IndexKind):
    name = "complex"

    def matches(self, label):
        return type(label) is ComplexLabel

    def parse(self, text):
        if not text:
            raise ValueError("empty complex index")
        if not text.endswith("i"):
            if not _FLOAT_RE.match(text):
                raise ValueError(f"bad complex index {text!r}")
            return ComplexLabel(float(text), 0.0)
        re_text, im_text = _split_imaginary(text[:-1])
        if im_text in ("", "+"):
            im = 1.0
        elif im_text == "-":
            im = -1.0
        elif _FLOAT_RE.match(im_text):
            im = float(im_text)
        else:
            raise ValueError(f"bad complex index {text!r}")
        if re_text == "":
            re_val = 0.0
        elif _FLOAT_RE.match(re_text):
            re_val = float(re_text)
        else:
            raise ValueError(f"bad complex index {text!r}")
        return ComplexLabel(re_val, im)

    def format(self, label):
        if label.im == 0.0:
            return repr(label.re)
        sign = "+" if label.im > 0 else "-"
        return f"{label.re!r}{sign}{abs(label.im)!r}i"


INT = IntKind()
TEXT = TextKind()
REAL = RealKind()
COMPLEX = ComplexKind()

KINDS = {k.name: k for k in (INT, TEXT, REAL, COMPLEX)}

_KIND_BY_TYPE = {int: INT, str: TEXT, float: REAL, ComplexLabel: COMPLEX}


def kind_of(label):
    """Kind of a label value; raises IncompatibleIndexKind for alien types."""
    kind = _KIND_BY_TYPE.get(type(label))
    if kind is None:
        raise IncompatibleIndexKind(f"unsupported index label {label!r}")
    return kind


def _kind_name(label):
    kind = _KIND_BY_TYPE.get(type(label))
    return kind.name if kind else type(label).__name__


def compare(a, b):
    """Strict total order on same-kind labels: -1, 0, or 1."""
    ta, tb = type(a), type(b)
    if ta is not tb:
        raise IncompatibleIndexKind(
            f"cannot compare {_kind_name(a)} index with {_kind_name(b)} index"
        )
    if ta not in _KIND_BY_TYPE:
        raise IncompatibleIndexKind(f"unsupported index label {a!r}")
    if a == b:
        return EQUAL
    return LESS if a < b else GREATER
