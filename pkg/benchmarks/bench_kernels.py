"""Benchmark the join kernels: jitted vs interpreted, vs brute force.

The engine dispatches through ``semnet.kernels`` module attributes, so the
interpreted route is timed by swapping the pure-Python originals back in;
the brute-force route goes through ``engine="bruteforce"``. Report columns
are best-of-``--repeat`` wall times.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--net NAME ...]
"""

from __future__ import annotations

import argparse
import time
from contextlib import contextmanager

from semnet import CountMode, Direction, Engine, Instance, check_suite, count_distinct
from semnet import kernels
from semnet.corpus import all_networks

DEFAULT_NETS = ("t4", "fig1-mini", "dodeca")


@contextmanager
def interpreted_kernels():
    saved = {name: getattr(kernels, name) for name in kernels.py_kernels}
    for name, fn in kernels.py_kernels.items():
        setattr(kernels, name, fn)
    try:
        yield
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run_case(net, op: str, engine: Engine):
    if op == "count":
        target = [vs.id for vs in net.sets]
        return lambda: count_distinct(net, Instance(), target, CountMode.FULL,
                                      engine=engine)
    return lambda: check_suite(net, Direction.FORWARD, CountMode.PROJECTED,
                               engine=engine)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5,
                        help="timed repetitions per cell; best is reported")
    parser.add_argument("--net", nargs="*", default=list(DEFAULT_NETS),
                        help="corpus networks to benchmark")
    args = parser.parse_args()

    nets = all_networks()
    unknown = [n for n in args.net if n not in nets]
    if unknown:
        parser.error(f"unknown networks: {', '.join(unknown)}")

    if kernels.JIT_ENABLED:
        # One warm pass so compilation is not billed to the first cell.
        check_suite(nets[args.net[0]], engine=Engine.JOIN)
        jit_label = "jit"
    else:
        jit_label = "jit (off!)"

    header = (f"{'network':<14} {'op':<7} {jit_label + ' ms':>10} "
              f"{'python ms':>10} {'brute ms':>10} {'speedup':>8}")
    print(header)
    print("-" * len(header))
    for name in args.net:
        net = nets[name]
        for op in ("count", "suite"):
            jit_t = best_of(run_case(net, op, Engine.JOIN), args.repeat)
            with interpreted_kernels():
                py_t = best_of(run_case(net, op, Engine.JOIN), args.repeat)
            brute_t = best_of(run_case(net, op, Engine.BRUTEFORCE), args.repeat)
            print(f"{name:<14} {op:<7} {jit_t * 1e3:>10.3f} "
                  f"{py_t * 1e3:>10.3f} {brute_t * 1e3:>10.3f} "
                  f"{py_t / jit_t:>7.1f}x")


if __name__ == "__main__":
    main()
