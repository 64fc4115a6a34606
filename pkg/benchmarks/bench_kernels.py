"""Compare the compiled and pure-Python bitmask kernels.

    python3 benchmarks/bench_kernels.py [--sizes 12 16 20] [--repeat 3]

Times hereditary saturated enumeration and closure of every singleton on
seeded random graphs. Without the compiled extension only the Python
backend is reported.
"""

import argparse
import random
import timeit

from lpaspec.graph import Edge, Graph
from lpaspec.kernels import available_backends, get_backend


def random_graph(n, density, seed):
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    edges = []
    for i, a in enumerate(names):
        # mostly forward edges keep the hsat lattice large
        for b in names[i + 1:]:
            if rng.random() < density:
                edges.append(Edge(f"e{len(edges)}", a, b))
        if rng.random() < 0.1:
            edges.append(Edge(f"e{len(edges)}", a, rng.choice(names)))
    return Graph(tuple(names), tuple(edges))


def bench(backend, g, repeat):
    succ, reach = list(g.succ_masks), list(g.reach_masks)

    def hsat():
        backend.enumerate_hsat(succ, reach)

    def closures():
        for i in range(len(succ)):
            backend.closure_stages(succ, reach, 1 << i)

    return {
        "hsat": min(timeit.repeat(hsat, number=1, repeat=repeat)),
        "closure": min(timeit.repeat(closures, number=20, repeat=repeat)) / 20,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 16, 20])
    parser.add_argument("--density", type=float, default=0.15)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    names = available_backends()
    print(f"backends: {', '.join(names)}")
    print(f"{'n':>3} {'edges':>5} {'kernel':>8} " + " ".join(f"{b:>10}" for b in names) + "  speedup")
    for n in args.sizes:
        g = random_graph(n, args.density, args.seed + n)
        results = {b: bench(get_backend(b), g, args.repeat) for b in names}
        for kernel in ("hsat", "closure"):
            times = [results[b][kernel] for b in names]
            cells = " ".join(f"{t * 1e3:>8.2f}ms" for t in times)
            if "compiled" in results:
                speed = f"{results['python'][kernel] / results['compiled'][kernel]:.0f}x"
            else:
                speed = "-"
            print(f"{n:>3} {len(g.edges):>5} {kernel:>8} {cells}  {speed}")


if __name__ == "__main__":
    main()
