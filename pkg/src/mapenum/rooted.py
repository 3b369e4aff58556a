"""Tables of rooted map counts.

``m_g(n)`` counts rooted maps of genus ``g`` with ``n`` edges and
``m_g(n, f)`` refines it by the number of faces ``f``. Both tables are built
bottom-up from the Carrell-Chapuy recurrences; every entry goes through an
exact division by ``n + 1`` that the kernels check, so a completed build is
self-verifying.

By face-vertex duality ``m_g(n, f)`` is also the number of rooted maps with
``f`` vertices, which is how the unrooted counter consumes the table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ._backend import get_kernel
from .errors import TableResourceError

AxisMeaning = Literal["faces", "vertices"]


def _check_sizes(max_genus: int, max_edges: int) -> None:
    for name, value in (("max_genus", max_genus), ("max_edges", max_edges)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"{name} must be an int, got {type(value).__name__}")
        if value < 0:
            raise ValueError(f"{name} must be >= 0, got {value}")


@dataclass(frozen=True, eq=True)
class EdgeTable:
    """Exact counts ``m_g(n)`` for ``0 <= g <= max_genus``, ``0 <= n <= max_edges``."""

    max_genus: int
    max_edges: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        g, n = key
        return lookup(self, g, n)

    def genus_sequence(self, g: int) -> tuple[int, ...]:
        """Return ``(m_g(0), ..., m_g(max_edges))``."""
        return self.rows[g]


@dataclass(frozen=True, eq=True)
class EdgeVertexTable:
    """Exact counts ``m_g(n, f)`` stored as jagged rows.

    ``rows[g][n]`` holds ``m_g(n, 1), ..., m_g(n, n + 1 - 2g)`` and is empty
    when ``n < 2g``. ``axis_meaning`` says whether the last index counts faces
    or vertices; the numbers are the same either way.
    """

    max_genus: int
    max_edges: int
    rows: tuple[tuple[tuple[int, ...], ...], ...]
    axis_meaning: AxisMeaning = "faces"

    def __getitem__(self, key: tuple[int, int, int]) -> int:
        g, n, f = key
        return lookup(self, g, n, f)

    def row(self, g: int, n: int) -> tuple[int, ...]:
        """Entries for ``f = 1 .. n + 1 - 2g`` (empty outside the support)."""
        _check_index(self, g, n)
        return self.rows[g][n]

    def marginal(self, g: int, n: int) -> int:
        """Sum of a row, i.e. ``m_g(n)``."""
        return sum(self.row(g, n))


def build_edge_table(max_genus: int, max_edges: int, *, backend: str | None = None) -> EdgeTable:
    """Build ``m_g(n)`` for every ``g <= max_genus`` and ``n <= max_edges``.

    Raises:
        ExactnessError: a division by ``n + 1`` left a remainder (a bug).
        TableResourceError: the table could not be allocated.
    """
    _check_sizes(max_genus, max_edges)
    kernel = get_kernel(backend)
    try:
        rows = kernel.edge_rows(max_genus, max_edges)
    except MemoryError as exc:
        raise TableResourceError(
            f"out of memory building edge table g<={max_genus}, n<={max_edges}"
        ) from exc
    return EdgeTable(max_genus, max_edges, tuple(tuple(r) for r in rows))


def build_edge_vertex_table(
    max_genus: int,
    max_edges: int,
    *,
    threads: int = 1,
    backend: str | None = None,
) -> EdgeVertexTable:
    """Build ``m_g(n, f)`` for every ``g <= max_genus`` and ``n <= max_edges``.

    ``threads > 1`` fills each edge layer in parallel (compiled kernel only);
    the result is identical to the single-threaded build.
    """
    _check_sizes(max_genus, max_edges)
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    kernel = get_kernel(backend)
    try:
        rows = kernel.edge_face_rows(max_genus, max_edges, threads)
    except MemoryError as exc:
        raise TableResourceError(
            f"out of memory building edge-face table g<={max_genus}, n<={max_edges}"
        ) from exc
    frozen = tuple(tuple(tuple(r) for r in per_n) for per_n in rows)
    return EdgeVertexTable(max_genus, max_edges, frozen, "faces")


def reinterpret_as_vertices(table: EdgeVertexTable) -> EdgeVertexTable:
    """Relabel the last axis of a face-indexed table as vertices."""
    if table.axis_meaning != "faces":
        raise ValueError(f"table axis is already {table.axis_meaning!r}")
    return EdgeVertexTable(table.max_genus, table.max_edges, table.rows, "vertices")


def _check_index(table, g, n):
    if not (0 <= g <= table.max_genus and 0 <= n <= table.max_edges):
        raise IndexError(
            f"(g={g}, n={n}) outside table bounds g<={table.max_genus}, n<={table.max_edges}"
        )


def lookup(table: EdgeTable | EdgeVertexTable, g: int, n: int, f: int | None = None) -> int:
    """Return a stored count; in-bounds indices outside the support give 0.

    For an :class:`EdgeVertexTable` the third index must satisfy
    ``0 <= f <= n + 1``.

    Raises:
        IndexError: an index is outside the table bounds.
    """
    _check_index(table, g, n)
    if isinstance(table, EdgeTable):
        if f is not None:
            raise TypeError("an EdgeTable is indexed by (g, n) only")
        return table.rows[g][n]
    if f is None:
        raise TypeError("an EdgeVertexTable is indexed by (g, n, f)")
    if not 0 <= f <= n + 1:
        raise IndexError(f"f={f} outside 0..{n + 1} for n={n}")
    row = table.rows[g][n]
    if 1 <= f <= len(row):
        return row[f - 1]
    return 0
