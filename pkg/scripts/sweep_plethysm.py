#!/usr/bin/env python3
"""Cross-check the three plethysm engines on every triple up to a degree bound."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from schurbranch.branching import branching_multiplicity, encode_classical
from schurbranch.partitions import enumerate_partitions, format_partition
from schurbranch.plethysm import plethysm_character, plethysm_specialized


@dataclass(frozen=True)
class SweepConfig:
    max_degree: int = 8
    skip_branching: bool = False


def sweep(cfg: SweepConfig) -> dict:
    start = time.perf_counter()
    checked, mismatches = 0, []
    for m in range(1, cfg.max_degree + 1):
        for d in range(1, cfg.max_degree // m + 1):
            for mu in enumerate_partitions(m):
                for nu in enumerate_partitions(d):
                    for lam in enumerate_partitions(m * d):
                        values = [plethysm_specialized(mu, nu, lam), plethysm_character(mu, nu, lam)]
                        if not cfg.skip_branching:
                            values.append(
                                branching_multiplicity(encode_classical("plethysm", lam, mu, nu))
                            )
                        checked += 1
                        if len(set(values)) != 1:
                            mismatches.append(
                                [format_partition(p) for p in (mu, nu, lam)] + [str(v) for v in values]
                            )
    return {
        "config": asdict(cfg),
        "triples": checked,
        "mismatches": mismatches,
        "seconds": round(time.perf_counter() - start, 2),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=SweepConfig.max_degree)
    ap.add_argument("--skip-branching", action="store_true")
    args = ap.parse_args()
    report = sweep(SweepConfig(args.max_degree, args.skip_branching))
    print(json.dumps(report, indent=2))
    raise SystemExit(1 if report["mismatches"] else 0)


if __name__ == "__main__":
    main()
