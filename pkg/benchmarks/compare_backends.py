"""Time the compiled and pure-Python kernels side by side.

    python3 benchmarks/compare_backends.py --max-edges 60 --step 10

Both kernels must produce identical tables; this is checked for every size
before the timings are printed.
"""

import argparse

from mapenum import build_edge_vertex_table
from mapenum._backend import KERNELS
from mapenum.bench import compare_backends, machine_descriptor


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--start", type=int, default=20)
    parser.add_argument("--max-edges", type=int, default=60)
    parser.add_argument("--step", type=int, default=10)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    names = sorted(KERNELS)
    sizes = list(range(args.start, args.max_edges + 1, args.step))
    for n in sizes:
        tables = {name: build_edge_vertex_table(n // 2, n, backend=name).rows for name in names}
        if len({repr(t) for t in tables.values()}) != 1:
            raise SystemExit(f"kernels disagree at n={n}")

    print(f"# {machine_descriptor()}; threads={args.threads}")
    header = ["n"] + [f"{stage}:{name}" for stage in ("rooted", "unrooted") for name in names]
    if len(names) == 2:
        header += ["rooted speedup", "unrooted speedup"]
    print(" | ".join(header))
    for n, rows in compare_backends(sizes, args.threads):
        cells = [str(n)]
        cells += [f"{rows[name].seconds_rooted:.3f}" for name in names]
        cells += [f"{rows[name].seconds_unrooted:.3f}" for name in names]
        if len(names) == 2:
            fast, slow = rows["compiled"], rows["python"]
            cells.append(f"{slow.seconds_rooted / max(fast.seconds_rooted, 1e-9):.1f}x")
            cells.append(f"{slow.seconds_unrooted / max(fast.seconds_unrooted, 1e-9):.1f}x")
        print(" | ".join(cells))


if __name__ == "__main__":
    main()
