"""Sparse-versus-dense benchmark harness.

Measures the same two operations (add, scale) through both representations
on randomly generated rational vectors with controlled support overlap.
Each (scenario, representation, operation) triple yields one report row
with three cost counters and a wall time:

* ``entries_touched`` -- how many stored entries the algorithm scans: the
  sparse merge consumes both supports (|A| + |B| for add, |A| for scale),
  the dense path always scans all ``dim`` positions;
* ``field_adds`` / ``field_muls`` -- actual field operations, measured by
  running the operation once with an instrumented field;
* ``median_ns`` -- median wall time over the repetitions, measured on the
  plain uninstrumented field so counting cannot distort it.

Everything except wall time is deterministic for a given seed.  Every run
also cross-checks that the sparse result, densified, equals the dense
result entry for entry.
"""

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass, fields as dataclass_fields
from fractions import Fraction

from .dense import DenseVector, to_dense
from .errors import InvalidScenario
from .fields import Field, RATIONAL
from .vector import AlgebraicVector

__all__ = [
    "OpCounter",
    "CountingField",
    "BenchScenario",
    "ReportRow",
    "generate_pair",
    "run_scenario",
    "run_sweep",
    "emit_report",
]


@dataclass
class OpCounter:
    """Monotone counters for one measured run; reset between runs."""

    field_adds: int = 0
    field_muls: int = 0
    entries_touched: int = 0

    def reset(self):
        self.field_adds = 0
        self.field_muls = 0
        self.entries_touched = 0


class CountingField(Field):
    """Field proxy that counts add/mul calls and delegates everything else."""

    def __init__(self, base, counter=None):
        self.base = base
        self.counter = counter if counter is not None else OpCounter()
        self.name = f"{base.name}+counted"
        self.exact = base.exact

    def add(self, a, b):
        self.counter.field_adds += 1
        return self.base.add(a, b)

    def mul(self, a, b):
        self.counter.field_muls += 1
        return self.base.mul(a, b)

    def element(self, value):
        return self.base.element(value)

    def zero(self):
        return self.base.zero()

    def one(self):
        return self.base.one()

    def neg(self, a):
        return self.base.neg(a)

    def inv(self, a):
        return self.base.inv(a)

    def is_zero(self, a):
        return self.base.is_zero(a)

    def parse(self, text):
        return self.base.parse(text)

    def format(self, a):
        return self.base.format(a)


@dataclass(frozen=True)
class BenchScenario:
    """One measurement point: dimension, support sizes, overlap, reps."""

    dim: int
    support_a: int
    support_b: int
    overlap_fraction: float = 0.5
    repetitions: int = 5
    seed: int = 0

    def validate(self):
        if self.dim < 1:
            raise InvalidScenario(f"dim must be >= 1, got {self.dim}")
        if not 0 <= self.support_a <= self.dim or not 0 <= self.support_b <= self.dim:
            raise InvalidScenario("support sizes must lie in 0..dim")
        if not 0.0 <= self.overlap_fraction <= 1.0:
            raise InvalidScenario("overlap_fraction must lie in [0, 1]")
        if self.repetitions < 1:
            raise InvalidScenario("repetitions must be >= 1")
        if self.union_size() > self.dim:
            raise InvalidScenario(
                f"supports {self.support_a} and {self.support_b} with overlap "
                f"{self.overlap_fraction} need {self.union_size()} labels, "
                f"but dim is {self.dim}"
            )

    def overlap_count(self):
        return round(self.overlap_fraction * min(self.support_a, self.support_b))

    def union_size(self):
        return self.support_a + self.support_b - self.overlap_count()


@dataclass(frozen=True)
class ReportRow:
    dim: int
    support_a: int
    support_b: int
    repr: str  # "algebraic" | "dense"
    op: str  # "add" | "scale"
    entries_touched: int
    field_adds: int
    field_muls: int
    median_ns: int


REPORT_COLUMNS = [f.name for f in dataclass_fields(ReportRow)]

# Small nonzero rationals; opposite pairs let overlapping entries cancel.
COEFFICIENT_POOL = tuple(
    Fraction(n, d) for n in (1, -1, 2, -2, 3, -3, 5, -5) for d in (1, 2, 3)
)


def generate_pair(scenario, rng):
    """Two random rational vectors whose supports overlap as configured."""
    k = scenario.overlap_count()
    union = rng.sample(range(1, scenario.dim + 1), scenario.union_size())
    common = union[:k]
    only_a = union[k : k + scenario.support_a - k]
    only_b = union[k + scenario.support_a - k :]
    v = AlgebraicVector(
        RATIONAL, [(l, rng.choice(COEFFICIENT_POOL)) for l in common + only_a]
    )
    w = AlgebraicVector(
        RATIONAL, [(l, rng.choice(COEFFICIENT_POOL)) for l in common + only_b]
    )
    return v, w


def _median_time_ns(op, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        op()
        t1 = time.perf_counter_ns()
        times.append(t1 - t0)
    return int(statistics.median(times))


def run_scenario(scenario):
    """Four report rows: {algebraic, dense} x {add, scale}."""
    scenario.validate()
    rng = random.Random(scenario.seed)
    v, w = generate_pair(scenario, rng)
    scalar = rng.choice(COEFFICIENT_POOL)
    dim = scenario.dim

    dv = to_dense(v, dim)
    dw = to_dense(w, dim)

    # Instrumented copies share the one counter; the timed copies above
    # stay on the plain field.
    counting = CountingField(RATIONAL)
    counter = counting.counter
    cv = AlgebraicVector._raw(counting, v.support, v.coefficients)
    cw = AlgebraicVector._raw(counting, w.support, w.coefficients)
    cdv = DenseVector._raw(counting, dv.entries)
    cdw = DenseVector._raw(counting, dw.entries)

    runs = [
        ("algebraic", "add", lambda: v + w, lambda: cv + cw, len(v) + len(w)),
        ("algebraic", "scale", lambda: v.scale(scalar), lambda: cv.scale(scalar), len(v)),
        ("dense", "add", lambda: dv + dw, lambda: cdv + cdw, dim),
        ("dense", "scale", lambda: dv.scale(scalar), lambda: cdv.scale(scalar), dim),
    ]

    counted_results = {}
    rows = []
    for repr_name, op_name, timed_op, counted_op, touched in runs:
        counter.reset()
        counted_results[repr_name, op_name] = counted_op()
        adds, muls = counter.field_adds, counter.field_muls
        if repr_name == "algebraic" and op_name == "add":
            assert touched <= len(v) + len(w)
        if repr_name == "dense":
            assert touched == dim
        rows.append(
            ReportRow(
                dim=dim,
                support_a=scenario.support_a,
                support_b=scenario.support_b,
                repr=repr_name,
                op=op_name,
                entries_touched=touched,
                field_adds=adds,
                field_muls=muls,
                median_ns=_median_time_ns(timed_op, scenario.repetitions),
            )
        )

    # Both representations must agree on the results, entry for entry.
    for op_name in ("add", "scale"):
        sparse = counted_results["algebraic", op_name]
        dense = counted_results["dense", op_name]
        redensified = to_dense(sparse, dim)
        if redensified.entries != dense.entries:
            raise AssertionError(
                f"representation mismatch for {op_name} in scenario {scenario}"
            )
    return rows


def run_sweep(dims, supports, overlap=0.5, repetitions=5, seed=0, on_skip=None):
    """Grid of scenarios; infeasible combinations are skipped via on_skip."""
    rows = []
    for i, dim in enumerate(dims):
        for j, support in enumerate(supports):
            scenario = BenchScenario(
                dim=dim,
                support_a=support,
                support_b=support,
                overlap_fraction=overlap,
                repetitions=repetitions,
                seed=seed + 1009 * i + j,
            )
            try:
                scenario.validate()
            except InvalidScenario as exc:
                if on_skip is not None:
                    on_skip(scenario, exc)
                continue
            rows.extend(run_scenario(scenario))
    return rows


def emit_report(rows):
    """CSV text with one row per (scenario, representation, operation)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for row in rows:
        writer.writerow([getattr(row, col) for col in REPORT_COLUMNS])
    return out.getvalue()
