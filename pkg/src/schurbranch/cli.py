"""Command line front end.

Exit status: 0 success, 1 rejected input, 2 resource cap exceeded,
3 disagreement between computation paths.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import branching, characters, plethysm, schur_weyl
from .errors import ConsistencyError, InvalidInput, ResourceLimitError
from .partitions import Partition, enumerate_partitions, format_partition, parse_partition
from .schur_expand import kostka

THREADS_ENV = "SCHURBRANCH_THREADS"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(f"{self.prog}: {message}")


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight(text: str) -> list[int]:
    out = []
    pos = 1
    for token in text.split(","):
        if not token.strip().isdigit():
            raise argparse.ArgumentTypeError(f"bad weight entry {token!r} at position {pos} in {text!r}")
        out.append(int(token))
        pos += len(token) + 1
    return out


def _run_both(engines: dict[str, Callable[[], int]], label: str) -> tuple[int, dict[str, int]]:
    values = {name: fn() for name, fn in engines.items()}
    if len(set(values.values())) != 1:
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        raise ConsistencyError(f"methods disagree on {label}: {detail}")
    return next(iter(values.values())), values


def _with_methods(method: str, engines: dict[str, Callable[[], int]], label: str):
    if method == "both":
        return _run_both(engines, label)
    value = engines[method]()
    return value, {method: value}


# ---------------------------------------------------------------------------
# output


def _emit_value(args, value: int, method: str, extra: dict | None = None):
    if args.json:
        doc = {"coefficient": str(value), "method": method}
        doc.update(extra or {})
        print(json.dumps(doc, sort_keys=True))
    else:
        print(value)


def _emit_table(args, rows: list[tuple[str, int]], header: tuple[str, str], meta: dict):
    if args.json:
        doc = dict(meta)
        doc["table"] = [{header[0]: k, "coefficient": str(v)} for k, v in rows]
        print(json.dumps(doc, sort_keys=True))
        return
    width = max([len(header[0])] + [len(k) for k, _ in rows])
    print(f"{header[0]:<{width}}  {header[1]}")
    for k, v in rows:
        print(f"{k:<{width}}  {v}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_kostka(args):
    _emit_value(args, kostka(args.shape, args.weight), "kostka")


def cmd_lr(args):
    lam, mu, nu = args.target, args.mu, args.nu
    engines = {
        "branching": lambda: branching.branching_multiplicity(
            branching.encode_classical("lr", lam, mu, nu)
        ),
        "character": lambda: characters.lr_character(lam, mu, nu),
    }
    value, seen = _with_methods(args.method, engines, f"c^{lam}_{mu},{nu}")
    _emit_value(args, value, args.method, {"values": {k: str(v) for k, v in seen.items()}})


def cmd_kronecker(args):
    a, b, mu = args.lambda1, args.lambda2, args.mu
    engines = {
        "branching": lambda: branching.branching_multiplicity(
            branching.encode_classical("kronecker", a, b, mu)
        ),
        "character": lambda: characters.kronecker_character(a, b, mu),
    }
    value, seen = _with_methods(args.method, engines, f"g({a}, {b}, {mu})")
    _emit_value(args, value, args.method, {"values": {k: str(v) for k, v in seen.items()}})


def cmd_plethysm(args):
    mu, nu = args.outer, args.inner
    if args.target is None:
        _table(args, "plethysm", (mu, nu))
        return
    lam = args.target
    engines = {
        "specialize": lambda: plethysm.plethysm_specialized(mu, nu, lam),
        "character": lambda: plethysm.plethysm_character(mu, nu, lam),
    }
    value, seen = _with_methods(args.method, engines, f"a^{lam}_{mu},{nu}")
    _emit_value(args, value, args.method, {"values": {k: str(v) for k, v in seen.items()}})


def cmd_restriction(args):
    value = branching.restriction_coefficient(args.glabel, args.slabel)
    _emit_value(args, value, "restriction")


def cmd_branching(args):
    inst = branching.BranchingInstance.load(args.instance)
    value = branching.branching_multiplicity(inst)
    if args.json:
        print(json.dumps(
            {"coefficient": str(value), "method": "branching", "L": list(inst.variable_counts())},
            sort_keys=True,
        ))
    else:
        print(value)


def cmd_verify(args):
    report = schur_weyl.verify(args.family, args.params, args.dims, cap=args.cap)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        status = "pass" if report.passed else "FAIL"
        print(f"{status} hwv={report.hwv_multiplicity} {report.method}={report.combinatorial}")
    if not report.passed:
        raise ConsistencyError(
            f"verifier found {report.hwv_multiplicity}, {report.method} gave {report.combinatorial}"
        )


def cmd_chartable(args):
    if args.n < 0:
        raise InvalidInput(f"n must be nonnegative, got {args.n}")
    table = characters.character_table(args.n)
    if args.json:
        print(json.dumps(table.to_json(), sort_keys=True))
        return
    labels = [format_partition(p) for p in table.rows]
    width = max(len(s) for s in labels)
    cells = [[str(v) for v in row] for row in table.values]
    colw = [max(len(labels[j]), *(len(r[j]) for r in cells)) for j in range(len(labels))]
    print(" " * width + "  " + "  ".join(f"{c:>{w}}" for c, w in zip(labels, colw)))
    for lab, row in zip(labels, cells):
        print(f"{lab:<{width}}  " + "  ".join(f"{v:>{w}}" for v, w in zip(row, colw)))


def _table_entry(job):
    family, params, key, method = job
    if family == "plethysm":
        mu, nu = params
        if method == "character":
            return plethysm.plethysm_character(mu, nu, key[0])
        return plethysm.plethysm_specialized(mu, nu, key[0])
    if family == "lr":
        mu, nu = params
        if method == "character":
            return characters.lr_character(key[0], mu, nu)
        return branching.branching_multiplicity(branching.encode_classical("lr", key[0], mu, nu))
    (mu,) = params
    if method == "character":
        return characters.kronecker_character(key[0], key[1], mu)
    return branching.branching_multiplicity(branching.encode_classical("kronecker", key[0], key[1], mu))


def _table(args, family: str, params: tuple[Partition, ...]):
    if family == "plethysm":
        keys = [(lam,) for lam in enumerate_partitions(params[0].size * params[1].size)]
        default = "specialize"
    elif family == "lr":
        keys = [(lam,) for lam in enumerate_partitions(params[0].size + params[1].size)]
        default = "branching"
    else:
        n = params[0].size
        keys = [(a, b) for a in enumerate_partitions(n) for b in enumerate_partitions(n)]
        default = "branching"
    method = args.method if args.method in ("character", "both") else default
    methods = [default, "character"] if method == "both" else [method]
    results = {}
    for m in methods:
        jobs = [(family, params, key, m) for key in keys]
        if args.threads > 1:
            with ProcessPoolExecutor(max_workers=args.threads) as pool:
                results[m] = list(pool.map(_table_entry, jobs))
        else:
            results[m] = [_table_entry(j) for j in jobs]
    if method == "both" and results[methods[0]] != results[methods[1]]:
        bad = [
            "/".join(map(format_partition, k))
            for k, x, y in zip(keys, results[methods[0]], results[methods[1]])
            if x != y
        ]
        raise ConsistencyError(f"methods disagree on {family} table entries: {', '.join(bad)}")
    values = results[methods[0]]
    rows = [("/".join(map(format_partition, k)), v) for k, v in zip(keys, values) if v]
    header = "lambda1/lambda2" if family == "kronecker" else "lambda"
    meta = {
        "family": family,
        "params": [format_partition(p) for p in params],
        "method": method,
    }
    _emit_table(args, rows, (header, "coefficient"), meta)


def cmd_table(args):
    expected = {"plethysm": 2, "lr": 2, "kronecker": 1}[args.family]
    if len(args.params) != expected:
        raise InvalidInput(f"table --family {args.family} needs {expected} partition(s)")
    _table(args, args.family, tuple(args.params))


# ---------------------------------------------------------------------------


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InvalidInput(f"{THREADS_ENV}={raw!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker processes for tables (default ${THREADS_ENV} or 1)")

    parser = _Parser(prog="schurbranch", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kostka", parents=[common], help="Kostka number K_{shape,weight}")
    p.add_argument("--shape", type=_partition, required=True)
    p.add_argument("--weight", type=_weight, required=True)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson c^target_{mu,nu}")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--target", type=_partition, required=True)
    p.add_argument("--method", choices=["branching", "character", "both"], default="branching")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("kronecker", parents=[common], help="Kronecker g(lambda1, lambda2, mu)")
    p.add_argument("--lambda1", type=_partition, required=True)
    p.add_argument("--lambda2", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--method", choices=["branching", "character", "both"], default="branching")
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("plethysm", parents=[common], help="plethysm coefficient a^target_{outer,inner}")
    p.add_argument("--outer", type=_partition, required=True)
    p.add_argument("--inner", type=_partition, required=True)
    p.add_argument("--target", type=_partition, default=None,
                   help="omit to list the whole decomposition")
    p.add_argument("--method", choices=["specialize", "character", "both"], default="specialize")
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("restriction", parents=[common],
                       help="multiplicity of Specht module SLABEL in Weyl module GLABEL")
    p.add_argument("--glabel", type=_partition, required=True)
    p.add_argument("--slabel", type=_partition, required=True)
    p.set_defaults(func=cmd_restriction)

    p = sub.add_parser("branching", parents=[common], help="general branching instance from JSON")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=cmd_branching)

    p = sub.add_parser("verify", parents=[common], help="Schur-Weyl highest weight certification")
    p.add_argument("--family", choices=["plethysm", "lr", "kronecker"], required=True)
    p.add_argument("--params", type=_partition, nargs=3, required=True,
                   help="plethysm/lr: MU NU LAMBDA; kronecker: LAMBDA1 LAMBDA2 MU")
    p.add_argument("--dims", type=int, nargs="+", required=True)
    p.add_argument("--cap", type=int, default=schur_weyl.DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chartable", parents=[common], help="character table of S_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("table", parents=[common], help="full decomposition listing")
    p.add_argument("--family", choices=["plethysm", "lr", "kronecker"], required=True)
    p.add_argument("--params", type=_partition, nargs="+", required=True,
                   help="plethysm: OUTER INNER; lr: MU NU; kronecker: MU")
    p.add_argument("--method", choices=["default", "character", "both"], default="default")
    p.set_defaults(func=cmd_table)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads is None:
            args.threads = _default_threads()
        if args.threads < 1:
            raise InvalidInput("--threads must be at least 1")
        args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
