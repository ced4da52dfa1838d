#!/usr/bin/env python3
"""Run the randomized verification suites and print a compact report.

This is the batch counterpart of `tensalg check all`: it draws seeded
instances, checks the algebraic laws, the nucleus closure oracles, the six
triangle identities and the six naturality squares, and reports per-suite
counts and timing.  Exit status is nonzero if any check fails.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from tensalg.generators import (laws_suite, naturality_suite, nuclei_suite,
                                triangles_suite)
from tensalg.reference_example import build, verify


@dataclass
class SuiteConfig:
    seed: int = 0
    laws: int = 50
    nuclei: int = 100
    triangles: int = 100
    naturality: int = 60
    skip_example: bool = False
    max_failures_shown: int = 20
    _runners: tuple = field(init=False, repr=False, default=(
        ("laws", laws_suite, "laws"),
        ("nuclei", nuclei_suite, "nuclei"),
        ("triangles", triangles_suite, "triangles"),
        ("naturality", naturality_suite, "naturality"),
    ))


def run(cfg: SuiteConfig) -> int:
    bad = 0
    if not cfg.skip_example:
        t0 = time.perf_counter()
        ex = build()
        checks = verify(ex)
        dt = time.perf_counter() - t0
        failed = [name for name, ok in checks if not ok]
        status = "ok" if not failed else "FAIL " + ",".join(failed)
        print(f"worked example     {len(checks):5d} checks  {dt:6.2f}s  {status}")
        bad += len(failed)

    for name, runner, attr in cfg._runners:
        count = getattr(cfg, attr)
        if count <= 0:
            continue
        t0 = time.perf_counter()
        report = runner(count=count, seed=cfg.seed)
        dt = time.perf_counter() - t0
        total, failed = report.counts()
        status = "ok" if failed == 0 else f"FAIL {failed}"
        print(f"{name:<18} {total:5d} checks  {dt:6.2f}s  {status}")
        for c in report.failures[:cfg.max_failures_shown]:
            print("  " + c.line())
        bad += failed
    return 0 if bad == 0 else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--laws", type=int, default=50, metavar="N")
    ap.add_argument("--nuclei", type=int, default=100, metavar="N")
    ap.add_argument("--triangles", type=int, default=100, metavar="N")
    ap.add_argument("--naturality", type=int, default=60, metavar="N")
    ap.add_argument("--skip-example", action="store_true",
                    help="do not rerun the built-in worked example")
    args = ap.parse_args(argv)
    cfg = SuiteConfig(seed=args.seed, laws=args.laws, nuclei=args.nuclei,
                      triangles=args.triangles, naturality=args.naturality,
                      skip_example=args.skip_example)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
