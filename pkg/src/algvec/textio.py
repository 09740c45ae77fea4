"""Line-oriented text format for vectors.

Grammar per line::

    line  := "zero" | pair (" " pair)*
    pair  := index ":" coeff

Index and coefficient literals follow the selected index kind and field
(int ``15``, quoted text ``"abc"``, real ``3.87``, complex ``3.87+2i``;
rational ``-18`` / ``5/6``, float shortest round-trip decimal, complex
rational ``1/2-3/4i``).  The formatter is strict and always emits the
canonical ascending form, so output is byte-comparable; the parser is
permissive, accepting out-of-order and duplicate indexes with a warning on
the diagnostic stream (never the output stream).  Parsing what was
formatted recovers the vector exactly.
"""

import sys
from dataclasses import dataclass, field as dataclass_field

from .errors import VectorSyntaxError
from .indexes import TEXT, compare, kind_of
from .vector import AlgebraicVector

__all__ = [
    "format_vector",
    "parse_vector",
    "read_vectors",
    "write_vectors",
    "VectorDocument",
]

ZERO_TOKEN = "zero"


def _warn_to_stderr(message):
    print(f"warning: {message}", file=sys.stderr)


def format_vector(vector):
    """One canonical text line; the zero vector prints as ``zero``."""
    if not vector:
        return ZERO_TOKEN
    kind = kind_of(vector.support[0])
    fmt_field = vector.field.format
    return " ".join(f"{kind.format(l)}:{fmt_field(c)}" for l, c in vector)


def parse_vector(line, kind, field, *, line_number=None, warn=_warn_to_stderr):
    """Parse one line into a canonical vector.

    Raises VectorSyntaxError (with 1-based column) on malformed input;
    calls ``warn`` for accepted-but-noncanonical input (duplicate or
    out-of-order indexes).  Pass ``warn=None`` to silence diagnostics.
    """
    if warn is None:
        warn = lambda message: None
    stripped = line.strip()
    if stripped == ZERO_TOKEN:
        return AlgebraicVector.zero(field)
    if not stripped:
        raise VectorSyntaxError("empty line", line=line_number, column=1)

    pairs = []
    pos = 0
    n = len(line)
    while pos < n:
        if line[pos] == " ":
            pos += 1
            continue
        start = pos
        # --- index token ---
        if kind is TEXT:
            if line[pos] != '"':
                raise VectorSyntaxError(
                    "text index must be quoted", line=line_number, column=pos + 1
                )
            close = line.find('"', pos + 1)
            if close == -1:
                raise VectorSyntaxError(
                    "unterminated quote", line=line_number, column=pos + 1
                )
            index_text = line[pos + 1 : close]
            pos = close + 1
        else:
            colon = line.find(":", pos)
            if colon == -1:
                raise VectorSyntaxError(
                    "expected index:coefficient pair", line=line_number, column=pos + 1
                )
            index_text = line[pos:colon]
            pos = colon
        if pos >= n or line[pos] != ":":
            raise VectorSyntaxError(
                "expected ':' after index", line=line_number, column=pos + 1
            )
        try:
            label = kind.parse(index_text)
        except ValueError as exc:
            raise VectorSyntaxError(str(exc), line=line_number, column=start + 1) from None
        pos += 1
        # --- coefficient token ---
        coeff_start = pos
        end = line.find(" ", pos)
        if end == -1:
            end = n
        coeff_text = line[pos:end]
        if not coeff_text:
            raise VectorSyntaxError(
                "missing coefficient", line=line_number, column=coeff_start + 1
            )
        try:
            coeff = field.parse(coeff_text)
        except ValueError as exc:
            raise VectorSyntaxError(
                str(exc), line=line_number, column=coeff_start + 1
            ) from None
        pairs.append((label, coeff))
        pos = end

    for (a, _), (b, _) in zip(pairs, pairs[1:]):
        order = compare(a, b)
        if order == 0:
            warn(_describe(line_number, "duplicate index; coefficients merged"))
            break
        if order > 0:
            warn(_describe(line_number, "indexes out of order; canonicalized"))
            break
    return AlgebraicVector(field, pairs)


def _describe(line_number, message):
    return message if line_number is None else f"line {line_number}: {message}"


def read_vectors(stream, kind, field, *, warn=_warn_to_stderr):
    """Parse every line of an open text stream."""
    return [
        parse_vector(line, kind, field, line_number=i, warn=warn)
        for i, line in enumerate(stream.read().splitlines(), start=1)
    ]


def write_vectors(vectors, stream):
    for v in vectors:
        stream.write(format_vector(v) + "\n")


@dataclass
class VectorDocument:
    """A parsed vector file: the kind/field tags plus one vector per line.

    The tags travel out of band (CLI flags or constructor arguments); the
    file body is just lines.
    """

    kind: object
    field: object
    vectors: list = dataclass_field(default_factory=list)

    @classmethod
    def load(cls, path, kind, field, *, warn=_warn_to_stderr):
        with open(path, encoding="utf-8") as fh:
            return cls(kind, field, read_vectors(fh, kind, field, warn=warn))

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            write_vectors(self.vectors, fh)
