#!/usr/bin/env python3
"""Run the highest-weight verifier over small plethysm, LR and Kronecker grids."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from schurbranch.errors import ResourceLimitError
from schurbranch.partitions import enumerate_partitions
from schurbranch.schur_weyl import DEFAULT_CAP, verify


@dataclass(frozen=True)
class GridConfig:
    plethysm_degree: int = 6
    plethysm_dim: int = 2
    lr_degree: int = 5
    lr_max_dim: int = 3
    kronecker_degree: int = 3
    cap: int = DEFAULT_CAP


def instances(cfg: GridConfig):
    n = cfg.plethysm_dim
    for m in range(1, cfg.plethysm_degree + 1):
        for d in range(1, cfg.plethysm_degree // m + 1):
            for mu in enumerate_partitions(m):
                for nu in enumerate_partitions(d):
                    for lam in enumerate_partitions(m * d, n):
                        yield "plethysm", (mu, nu, lam), (n,)
    for n in range(1, cfg.lr_max_dim + 1):
        for a in range(cfg.lr_degree + 1):
            for b in range(cfg.lr_degree + 1 - a):
                for mu in enumerate_partitions(a, n):
                    for nu in enumerate_partitions(b, n):
                        for lam in enumerate_partitions(a + b, n):
                            yield "lr", (mu, nu, lam), (n,)
    for mu in enumerate_partitions(cfg.kronecker_degree):
        for l1 in enumerate_partitions(cfg.kronecker_degree, 2):
            for l2 in enumerate_partitions(cfg.kronecker_degree, 2):
                yield "kronecker", (l1, l2, mu), (2, 2)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(GridConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = GridConfig(**vars(ap.parse_args()))
    counts = {"passed": 0, "failed": [], "skipped": 0}
    slowest = 0.0
    for family, params, dims in instances(cfg):
        start = time.perf_counter()
        try:
            report = verify(family, params, dims, cfg.cap)
        except ResourceLimitError:
            counts["skipped"] += 1
            continue
        slowest = max(slowest, time.perf_counter() - start)
        if report.passed:
            counts["passed"] += 1
        else:
            counts["failed"].append(report.to_json())
    print(json.dumps({"config": asdict(cfg), **counts, "slowest_seconds": slowest}, indent=2))
    raise SystemExit(1 if counts["failed"] else 0)


if __name__ == "__main__":
    main()
