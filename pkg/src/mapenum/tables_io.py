"""CSV/JSON serialisation of count tables and fixture verification.

Every table is flattened to records ``kind,genus,edges,vertices,count``.
Counts are always written as decimal strings because they overflow 64-bit
integers and doubles. Output is UTF-8 with LF line endings and is canonical:
export -> parse -> export reproduces the same bytes.
"""

from __future__ import annotations

import io
import json
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Union

from .errors import FixtureParseError
from .rooted import EdgeTable, EdgeVertexTable
from .series import GenusPolynomial, render_rational
from .unrooted import UnrootedTable

KINDS = ("rooted-edges", "rooted-edges-vertices", "unrooted")
HEADER = "kind,genus,edges,vertices,count"
SUM = "sum"
_COUNT_RE = re.compile(r"0|[1-9][0-9]*")


@dataclass(frozen=True)
class CountRecord:
    kind: str
    genus: int
    edges: int
    vertices: Union[int, str, None]
    count: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")
        if not isinstance(self.count, str) or not _COUNT_RE.fullmatch(self.count):
            raise ValueError(f"count must be a canonical decimal string, got {self.count!r}")
        if self.kind == "rooted-edges" and self.vertices is not None:
            raise ValueError("rooted-edges records carry no vertex count")
        if self.kind != "rooted-edges" and self.vertices is None:
            raise ValueError(f"{self.kind} records need a vertex count")
        if isinstance(self.vertices, str) and self.vertices != SUM:
            raise ValueError(f"vertices must be an int or 'sum', got {self.vertices!r}")

    @property
    def key(self):
        v = self.vertices
        vkey = (0, 0) if v is None else (2, 0) if v == SUM else (1, v)
        return (self.genus, self.edges, vkey, self.kind)

    @property
    def value(self) -> int:
        return int(self.count)

    def label(self) -> str:
        v = "" if self.vertices is None else f" v={self.vertices}"
        return f"{self.kind} g={self.genus} e={self.edges}{v}"


Table = Union[EdgeTable, EdgeVertexTable, UnrootedTable]


def _table_records(table):
    if isinstance(table, EdgeTable):
        for g in range(table.max_genus + 1):
            for n in range(table.max_edges + 1):
                yield CountRecord("rooted-edges", g, n, None, str(table.rows[g][n]))
    elif isinstance(table, EdgeVertexTable):
        for g in range(table.max_genus + 1):
            for n in range(2 * g, table.max_edges + 1):
                row = table.rows[g][n]
                for idx, c in enumerate(row):
                    f = idx + 1
                    v = f if table.axis_meaning == "vertices" else n + 2 - 2 * g - f
                    yield CountRecord("rooted-edges-vertices", g, n, v, str(c))
    elif isinstance(table, UnrootedTable):
        for g in range(table.max_genus + 1):
            for e in range(2 * g, table.max_edges + 1):
                row = table.rows[g][e]
                for idx, c in enumerate(row):
                    yield CountRecord("unrooted", g, e, idx + 1, str(c))
                yield CountRecord("unrooted", g, e, SUM, str(sum(row)))
    else:
        raise TypeError(f"cannot export {type(table).__name__}")


def records(table: Table | Iterable[CountRecord]) -> list[CountRecord]:
    """Flatten a table (or pass through records), sorted by genus, edges, vertices."""
    if isinstance(table, (EdgeTable, EdgeVertexTable, UnrootedTable)):
        recs = list(_table_records(table))
    else:
        recs = list(table)
    return sorted(recs, key=lambda r: r.key)


def dumps_csv(recs: Iterable[CountRecord]) -> str:
    lines = [HEADER]
    for r in recs:
        v = "" if r.vertices is None else str(r.vertices)
        lines.append(f"{r.kind},{r.genus},{r.edges},{v},{r.count}")
    return "\n".join(lines) + "\n"


def dumps_json(recs: Iterable[CountRecord]) -> str:
    items = [
        json.dumps(
            {"kind": r.kind, "genus": r.genus, "edges": r.edges,
             "vertices": r.vertices, "count": r.count},
            separators=(",", ":"),
        )
        for r in recs
    ]
    if not items:
        return "[]\n"
    return "[\n" + ",\n".join(items) + "\n]\n"


def export(table, fmt: str = "csv", destination=None) -> bytes:
    """Serialise ``table`` as CSV or JSON and optionally write it out.

    ``destination`` may be a path, a binary stream or a text stream. The
    encoded bytes are returned in every case.
    """
    recs = records(table)
    if fmt == "csv":
        text = dumps_csv(recs)
    elif fmt == "json":
        text = dumps_json(recs)
    else:
        raise ValueError(f"unknown format {fmt!r}; use 'csv' or 'json'")
    data = text.encode("utf-8")
    if destination is None:
        return data
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "wb") as fh:
            fh.write(data)
    elif isinstance(destination, io.TextIOBase):
        destination.write(text)
    else:
        destination.write(data)
    return data


def _read_text(source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    if isinstance(source, os.PathLike):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _parse_int(text, what, line):
    if not _COUNT_RE.fullmatch(text):
        raise FixtureParseError(f"{what} must be a non-negative integer, got {text!r}", line)
    return int(text)


def parse_csv(source) -> list[CountRecord]:
    """Parse CSV text, bytes, a path-like or a stream into records.

    Raises:
        FixtureParseError: with the 1-based line number of the bad line.
    """
    lines = _read_text(source).split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].strip() != HEADER:
        raise FixtureParseError(f"expected header {HEADER!r}", 1)
    out = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.rstrip("\r").split(",")
        if len(cells) != 5:
            raise FixtureParseError(f"expected 5 fields, got {len(cells)}", lineno)
        kind, g, e, v, count = cells
        genus = _parse_int(g, "genus", lineno)
        edges = _parse_int(e, "edges", lineno)
        if v == "":
            vertices = None
        elif v == SUM:
            vertices = SUM
        else:
            vertices = _parse_int(v, "vertices", lineno)
        _parse_int(count, "count", lineno)
        try:
            out.append(CountRecord(kind, genus, edges, vertices, count))
        except ValueError as exc:
            raise FixtureParseError(str(exc), lineno) from None
    return out


def parse_json(source) -> list[CountRecord]:
    try:
        items = json.loads(_read_text(source))
    except json.JSONDecodeError as exc:
        raise FixtureParseError(exc.msg, exc.lineno) from None
    if not isinstance(items, list):
        raise FixtureParseError("expected a JSON array of records")
    out = []
    for idx, obj in enumerate(items):
        try:
            out.append(CountRecord(obj["kind"], obj["genus"], obj["edges"],
                                   obj["vertices"], obj["count"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FixtureParseError(f"record {idx}: {exc}") from None
    return out


def fixture_path():
    """Path of the shipped reference fixture (unrooted counts, genera 0-19)."""
    return resources.files("mapenum").joinpath("fixtures", "unrooted_reference.csv")


def load_fixtures(path=None) -> list[CountRecord]:
    if path is None:
        return parse_csv(fixture_path().read_text(encoding="utf-8"))
    return parse_csv(Path(path))


class RecordTable:
    """Records loaded from an exported file, looked up by key."""

    def __init__(self, recs: Iterable[CountRecord]):
        self._values = {}
        for r in recs:
            self._values[(r.kind, r.genus, r.edges, r.vertices)] = r.value

    def get(self, record: CountRecord):
        return self._values.get((record.kind, record.genus, record.edges, record.vertices))


@dataclass
class CheckResult:
    record: CountRecord
    status: str  # "pass", "mismatch" or "coverage"
    actual: int | None = None

    def describe(self) -> str:
        label = self.record.label()
        if self.status == "pass":
            return f"PASS {label}"
        if self.status == "coverage":
            return f"FAIL {label}: outside table coverage"
        return f"FAIL {label}: expected {self.record.count}, actual {self.actual}"


@dataclass
class VerificationReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status != "pass"]

    @property
    def ok(self) -> bool:
        return bool(self.results) and not self.failures

    def summary(self) -> str:
        n, bad = len(self.results), len(self.failures)
        return f"{n - bad}/{n} fixture records match" + ("" if bad == 0 else f", {bad} failed")

    def lines(self, verbose=False) -> Iterator[str]:
        for r in self.results:
            if verbose or r.status != "pass":
                yield r.describe()
        yield self.summary()


def _actual(table, rec):
    """Return the table value for ``rec``, or None when not covered."""
    if isinstance(table, RecordTable):
        return table.get(rec)
    g, e, v = rec.genus, rec.edges, rec.vertices
    if rec.kind == "rooted-edges":
        if not isinstance(table, EdgeTable):
            raise TypeError(f"{rec.kind} record checked against {type(table).__name__}")
        if g > table.max_genus or e > table.max_edges:
            return None
        return table.rows[g][e]
    if rec.kind == "rooted-edges-vertices":
        if not isinstance(table, EdgeVertexTable):
            raise TypeError(f"{rec.kind} record checked against {type(table).__name__}")
        if g > table.max_genus or e > table.max_edges:
            return None
        row = table.rows[g][e]
        if v == SUM:
            return sum(row)
        idx = v if table.axis_meaning == "vertices" else e + 2 - 2 * g - v
        return row[idx - 1] if 1 <= idx <= len(row) else 0
    if not isinstance(table, UnrootedTable):
        raise TypeError(f"{rec.kind} record checked against {type(table).__name__}")
    if g > table.max_genus or e > table.max_edges:
        return None
    return table.row_sum(g, e) if v == SUM else table.lookup(g, e, v)


def verify_fixtures(table, fixtures) -> VerificationReport:
    """Compare every fixture record with ``table``.

    ``fixtures`` is a list of records or anything :func:`parse_csv` accepts.
    Records outside the table bounds are reported as coverage failures.
    """
    recs = fixtures if isinstance(fixtures, list) else parse_csv(fixtures)
    report = VerificationReport()
    for rec in recs:
        actual = _actual(table, rec)
        if actual is None:
            report.results.append(CheckResult(rec, "coverage"))
        elif actual == rec.value:
            report.results.append(CheckResult(rec, "pass", actual))
        else:
            report.results.append(CheckResult(rec, "mismatch", actual))
    return report


def poly_to_json(poly: GenusPolynomial) -> str:
    """Machine-readable form of ``P_g``: coefficients as strings, lowest power first."""
    form = render_rational(poly)
    return json.dumps(
        {
            "genus": poly.genus,
            "coeffs": [str(c) for c in poly.coeffs],
            "z_power": form.z_power,
            "exponents": list(form.exponents),
            "rational": form.text,
            "substitution": form.substitution,
        },
        indent=2,
    ) + "\n"
