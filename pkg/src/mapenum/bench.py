"""Wall-clock timing of full table builds.

For each ``n`` in the trial range the full vertex-refined rooted table with
``g <= n // 2`` is built, then the unrooted table from it. The printed layout
is one column per ``n``.
"""

from __future__ import annotations

import platform
import time
from dataclasses import dataclass, field

from ._backend import get_kernel
from .rooted import build_edge_vertex_table, reinterpret_as_vertices
from .unrooted import build_unrooted_table


@dataclass(frozen=True)
class BenchRow:
    n: int
    seconds_rooted: float
    seconds_unrooted: float | None


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    machine: str = ""
    threads: int = 1
    backend: str = ""

    def format_text(self) -> str:
        head = ["n"] + [str(r.n) for r in self.rows]
        rooted = ["rooted (s)"] + [f"{r.seconds_rooted:.3f}" for r in self.rows]
        lines = [head, rooted]
        if any(r.seconds_unrooted is not None for r in self.rows):
            lines.append(["unrooted (s)"] + [
                "-" if r.seconds_unrooted is None else f"{r.seconds_unrooted:.3f}"
                for r in self.rows
            ])
        widths = [max(len(line[i]) for line in lines) for i in range(len(head))]
        out = [f"# {self.machine}; backend={self.backend}; threads={self.threads}"]
        for line in lines:
            cells = [line[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(line[1:], widths[1:])]
            out.append(" | ".join(cells))
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        lines = ["n,seconds_rooted,seconds_unrooted"]
        for r in self.rows:
            unrooted = "" if r.seconds_unrooted is None else f"{r.seconds_unrooted:.6f}"
            lines.append(f"{r.n},{r.seconds_rooted:.6f},{unrooted}")
        return "\n".join(lines) + "\n"


def machine_descriptor() -> str:
    return f"{platform.machine()} {platform.processor() or 'unknown cpu'}, {platform.system()}, Python {platform.python_version()}"


def time_build(n: int, *, unrooted: bool = True, threads: int = 1, backend: str | None = None) -> BenchRow:
    start = time.perf_counter()
    rooted = build_edge_vertex_table(n // 2, n, threads=threads, backend=backend)
    rooted_s = time.perf_counter() - start
    unrooted_s = None
    if unrooted:
        start = time.perf_counter()
        build_unrooted_table(reinterpret_as_vertices(rooted), backend=backend)
        unrooted_s = time.perf_counter() - start
    return BenchRow(n, rooted_s, unrooted_s)


def run_trials(
    max_edges: int,
    step: int,
    start: int = 20,
    *,
    unrooted: bool = True,
    threads: int = 1,
    backend: str | None = None,
) -> BenchReport:
    """Time builds for ``n = start, start + step, ..., <= max_edges``."""
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    report = BenchReport(
        machine=machine_descriptor(),
        threads=threads,
        backend=get_kernel(backend).NAME,
    )
    for n in range(start, max_edges + 1, step):
        report.rows.append(time_build(n, unrooted=unrooted, threads=threads, backend=backend))
    return report


def compare_backends(sizes, threads: int = 1, *, unrooted: bool = True) -> list[tuple[int, dict[str, BenchRow]]]:
    """Time full builds on every available kernel for each size."""
    from ._backend import KERNELS

    return [(n, {name: time_build(n, unrooted=unrooted, threads=threads, backend=name)
                 for name in KERNELS})
            for n in sizes]
