"""Command-line interface.

Subcommands operate on one-vector-per-line text files (see textio):

    show A            parse and re-emit in canonical form
    add A B           pairwise sum, line by line
    scale K A         scalar multiple of every line
    axpy K X Y        K*x + y, line by line
    to-dense --dim N  emit dense [a,b,...] lines
    from-dense A      parse dense lines back to sparse form
    bench ...         sparse-vs-dense sweep; CSV plus figures

Global flags select the index kind and field and the output path.  Exit
codes: 0 success, 1 usage error, 2 parse or data error.  Scalars starting
with "-" that argparse would read as flags can be escaped with "--", e.g.
``algvec scale -- -1/2 v.vec``.
"""

import argparse
import sys

from .bench import run_sweep, emit_report
from .errors import AlgvecError, VectorSyntaxError
from .fields import FIELDS
from .indexes import KINDS
from .textio import format_vector, read_vectors

USAGE_ERROR = 1
DATA_ERROR = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Route argparse failures through our exit-code policy.
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser():
    parser = _Parser(prog="algvec", description="sparse algebraic vector toolkit")
    parser.add_argument(
        "--index-type", choices=sorted(KINDS), default="int", help="index label kind"
    )
    parser.add_argument(
        "--field", choices=sorted(FIELDS), default="rational", help="coefficient field"
    )
    parser.add_argument(
        "--output", metavar="PATH", default=None, help="write results here instead of stdout"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("show", help="parse a file and re-emit canonical form")
    p.add_argument("file")

    p = sub.add_parser("add", help="pairwise sum of two files, line by line")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = sub.add_parser("scale", help="multiply every line by a scalar")
    p.add_argument("scalar")
    p.add_argument("file")

    p = sub.add_parser("axpy", help="K*x + y, line by line")
    p.add_argument("scalar")
    p.add_argument("file_x")
    p.add_argument("file_y")

    p = sub.add_parser("to-dense", help="emit dense [a,b,...] lines")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("file")

    p = sub.add_parser("from-dense", help="parse dense lines into sparse form")
    p.add_argument("file")

    p = sub.add_parser("bench", help="sparse-vs-dense benchmark sweep")
    p.add_argument("--dims", default="100,10000", help="comma-separated dimensions")
    p.add_argument("--supports", default="3,10,100", help="comma-separated support sizes")
    p.add_argument("--overlap", type=float, default=0.5)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument(
        "--plots",
        metavar="DIR",
        default=None,
        help="directory for figures (default: alongside --output)",
    )
    return parser


def _load(path, kind, field):
    from .textio import VectorDocument

    return VectorDocument.load(path, kind, field).vectors


def _format_dense(dense):
    fmt = dense.field.format
    return "[" + ",".join(fmt(e) for e in dense) + "]"


def _parse_dense_line(line, field, line_number):
    from .dense import DenseVector

    stripped = line.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")) or len(stripped) < 3:
        raise VectorSyntaxError(
            "dense line must be [a,b,...]", line=line_number, column=1
        )
    try:
        entries = [field.parse(tok.strip()) for tok in stripped[1:-1].split(",")]
    except ValueError as exc:
        raise VectorSyntaxError(str(exc), line=line_number) from None
    return DenseVector(field, entries)


def _pairwise(xs, ys, what):
    from .errors import IncompatibleInput

    if len(xs) != len(ys):
        raise IncompatibleInput(
            f"{what}: line counts differ ({len(xs)} vs {len(ys)})"
        )
    return zip(xs, ys)


def _run(ns):
    """Execute one subcommand; returns the output text."""
    kind = KINDS[ns.index_type]
    field = FIELDS[ns.field]

    if ns.command == "show":
        return "".join(format_vector(v) + "\n" for v in _load(ns.file, kind, field))

    if ns.command == "add":
        va = _load(ns.file_a, kind, field)
        vb = _load(ns.file_b, kind, field)
        return "".join(
            format_vector(a + b) + "\n" for a, b in _pairwise(va, vb, "add")
        )

    if ns.command == "scale":
        k = field.parse(ns.scalar)
        return "".join(
            format_vector(v.scale(k)) + "\n" for v in _load(ns.file, kind, field)
        )

    if ns.command == "axpy":
        k = field.parse(ns.scalar)
        xs = _load(ns.file_x, kind, field)
        ys = _load(ns.file_y, kind, field)
        return "".join(
            format_vector(x.scale(k) + y) + "\n" for x, y in _pairwise(xs, ys, "axpy")
        )

    if ns.command == "to-dense":
        from .dense import to_dense

        return "".join(
            _format_dense(to_dense(v, ns.dim)) + "\n"
            for v in _load(ns.file, kind, field)
        )

    if ns.command == "from-dense":
        from .dense import from_dense

        with open(ns.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        denses = [
            _parse_dense_line(line, field, i) for i, line in enumerate(lines, start=1)
        ]
        return "".join(format_vector(from_dense(d)) + "\n" for d in denses)

    if ns.command == "bench":
        return _run_bench(ns)

    raise AssertionError(f"unhandled command {ns.command}")


def _parse_int_list(text, flag):
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise _UsageError(f"{flag} expects comma-separated integers, got {text!r}")
    if not values:
        raise _UsageError(f"{flag} must name at least one value")
    return values


def _run_bench(ns):
    dims = _parse_int_list(ns.dims, "--dims")
    supports = _parse_int_list(ns.supports, "--supports")

    def on_skip(scenario, exc):
        print(f"skipping infeasible scenario: {exc}", file=sys.stderr)

    rows = run_sweep(
        dims,
        supports,
        overlap=ns.overlap,
        repetitions=ns.reps,
        seed=ns.seed,
        on_skip=on_skip,
    )
    report = emit_report(rows)

    plot_dir = ns.plots
    stem = "bench"
    if plot_dir is None and ns.output is not None:
        import os

        plot_dir = os.path.dirname(os.path.abspath(ns.output))
        stem = os.path.splitext(os.path.basename(ns.output))[0]
    if plot_dir is not None:
        from .plotting import render_figures

        for path in render_figures(rows, plot_dir, stem=stem):
            print(f"wrote {path}", file=sys.stderr)
    return report


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return USAGE_ERROR
    try:
        text = _run(ns)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return USAGE_ERROR
    except (AlgvecError, OSError, ValueError, ZeroDivisionError) as exc:
        print(f"algvec: error: {exc}", file=sys.stderr)
        return DATA_ERROR
    if ns.output is None:
        sys.stdout.write(text)
    else:
        with open(ns.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
