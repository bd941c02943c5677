#!/usr/bin/env python3
"""Time plethysm_specialized for s_mu[s_(d)] at target (d, d) and fit a
log-log slope over d. Caches are cleared before every sample."""

from __future__ import annotations

import argparse
import importlib
import json
import math
import pkgutil
import statistics
import time
from dataclasses import asdict, dataclass

import schurbranch
from schurbranch.partitions import Partition
from schurbranch.plethysm import plethysm_specialized


@dataclass(frozen=True)
class ScalingConfig:
    outer: int = 2
    d_min: int = 2
    d_max: int = 14
    repeats: int = 7


def clear_caches() -> None:
    for info in pkgutil.iter_modules(schurbranch.__path__):
        module = importlib.import_module(f"schurbranch.{info.name}")
        for value in vars(module).values():
            if hasattr(value, "cache_clear"):
                value.cache_clear()


def measure(cfg: ScalingConfig) -> dict:
    mu = Partition((cfg.outer,))
    rows = []
    for d in range(cfg.d_min, cfg.d_max + 1):
        target = Partition((d,) * cfg.outer)
        samples = []
        for _ in range(cfg.repeats):
            clear_caches()
            start = time.perf_counter()
            value = plethysm_specialized(mu, Partition((d,)), target)
            samples.append(time.perf_counter() - start)
        rows.append({"d": d, "coefficient": str(value), "median_seconds": statistics.median(samples)})
    fit = statistics.linear_regression(
        [math.log(r["d"]) for r in rows], [math.log(r["median_seconds"]) for r in rows]
    )
    return {"config": asdict(cfg), "rows": rows, "slope": fit.slope}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(ScalingConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    args = ap.parse_args()
    print(json.dumps(measure(ScalingConfig(**vars(args))), indent=2))


if __name__ == "__main__":
    main()
