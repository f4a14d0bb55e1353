#!/usr/bin/env python3
"""Benchmark the census kernels: compiled extension vs pure Python.

Each backend runs in its own subprocess because the kernel module is chosen
once at import time. Workloads are timed as the minimum over --repeats runs.

Usage: python benchmarks/bench_census.py [--repeats N]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = [
    ("direct", 5),
    ("direct", 6),
    ("graphs", 6),
    ("graphs", 7),
]

_CHILD = r"""
import json, sys, time
from i3free._backend import BACKEND
from i3free.census import census_direct, census_graphs

repeats = int(sys.argv[1])
workloads = json.loads(sys.argv[2])
fns = {"direct": census_direct, "graphs": census_graphs}

out = {"backend": BACKEND, "times": {}}
census_direct(4)  # warm-up
for method, n in workloads:
    best = min(
        (lambda t0=time.perf_counter(): (fns[method](n), time.perf_counter() - t0)[1])()
        for _ in range(repeats)
    )
    out["times"][f"{method}:{n}"] = best
print(json.dumps(out))
"""


def run_backend(pure_python: bool, repeats: int) -> dict:
    env = dict(os.environ)
    env.pop("I3_PURE_PYTHON", None)
    if pure_python:
        env["I3_PURE_PYTHON"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", _CHILD, str(repeats), json.dumps(WORKLOADS)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    compiled = run_backend(pure_python=False, repeats=args.repeats)
    python = run_backend(pure_python=True, repeats=args.repeats)
    if compiled["backend"] == python["backend"]:
        print(
            f"only the {python['backend']} backend is available; "
            "build the extension to compare",
            file=sys.stderr,
        )

    header = f"{'workload':<12} {compiled['backend']:>12} {python['backend']:>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for method, n in WORKLOADS:
        key = f"{method}:{n}"
        tc = compiled["times"][key]
        tp = python["times"][key]
        print(f"{key:<12} {tc:>11.4f}s {tp:>11.4f}s {tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
