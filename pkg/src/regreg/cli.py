"""Command-line interface: ``regreg classes|sequence|solve|bench``.

Exit codes: 0 success, 2 usage or input error, 3 search exhausted.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import tempfile
import time
from pathlib import Path

from .errors import RegregError, TooLarge
from .families import Family, FamilySpec
from .instances import (
    StructuredInstance,
    build_structured,
    gen_rho_tlog,
    tlog_cap,
)
from .ordertype import class_count, enumerate_classes, sig_key
from .regularity import find_regressively_regular
from .solvers import bound_comparisons, solve_dp, solve_mitm, solve_structured

log = logging.getLogger("regreg")

EXIT_OK, EXIT_USAGE, EXIT_NOT_FOUND = 0, 2, 3
ENGINES = ("structured", "mitm", "dp")


class UsageError(Exception):
    pass


def _seed(args) -> int:
    env = os.environ.get("REGREG_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"REGREG_SEED must be an integer, got {env!r}")
    return args.seed


def write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def instance_path(out_dir: Path, p: int) -> Path:
    return out_dir / f"H_{p:03d}.json"


def cmd_classes(args) -> int:
    if not 2 <= args.k <= 6:
        raise UsageError(f"-k must be in 2..6, got {args.k}")
    sigs = enumerate_classes(args.k)
    expected = class_count(args.k)
    report = {
        "k": args.k,
        "count": len(sigs),
        "surjection_count": expected,
        "agrees": len(sigs) == expected,
        "below_k_pow_k": len(sigs) < args.k**args.k,
    }
    if args.list:
        report["signatures"] = [sig_key(s) for s in sorted(sigs)]
    print(json.dumps(report))
    return EXIT_OK if report["agrees"] else 1


def _build_for_p(spec, k, p, t, seed, ground, budget, strict):
    found = find_regressively_regular(spec, k, p, ground, budget)
    if found is None:
        return None
    f, grid = found
    rho = gen_rho_tlog(grid, t, seed ^ p, strict=strict)
    return build_structured(f, grid, rho, t)


def cmd_sequence(args) -> int:
    k, t = args.k, args.t
    if k < 2 or t < 1 or args.pmax < 2:
        raise UsageError("need k >= 2, t >= 1, pmax >= 2")
    seed = _seed(args)
    spec = FamilySpec(Family(args.family))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary = []
    for p in range(2, args.pmax + 1):
        lo = args.ground_min
        ground = range(lo, lo + 4 * p)
        inst = _build_for_p(spec, k, p, t, seed, ground, args.budget, strict=False)
        if inst is None:
            print(
                f"no regressively regular E found for p={p} within budget {args.budget}",
                file=sys.stderr,
            )
            return EXIT_NOT_FOUND
        path = instance_path(out_dir, p)
        write_atomic(path, inst.to_json())
        summary.append(
            {
                "p": p,
                "file": path.name,
                "e0": inst.e0,
                "size": p**k,
                "negatives": len(inst.negatives),
                "small_positives": len(inst.small_positives),
                "large_positives": len(inst.large_positives),
                "dropped_zeros": inst.dropped_zeros,
            }
        )
    print(json.dumps({"k": k, "t": t, "family": spec.family_id.value, "seed": seed, "instances": summary}))
    return EXIT_OK


def load_instance(path) -> StructuredInstance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    return StructuredInstance.from_json(text)


def run_engine(inst: StructuredInstance, engine: str):
    if engine == "structured":
        return solve_structured(inst)
    if engine == "mitm":
        return solve_mitm(inst.values())
    if engine == "dp":
        return solve_dp(inst.values())
    raise UsageError(f"unknown engine {engine!r}")


def cmd_solve(args) -> int:
    inst = load_instance(args.file)
    print(run_engine(inst, args.engine).to_json())
    return EXIT_OK


BENCH_COLUMNS = ["p", "size", "comparisons", "bound", "time_struct_ns", "time_mitm_ns"]


def bench_ground_min(k: int, p: int, t: int) -> int:
    """Least ``e0`` whose small-offset window fits the full t-log quota."""
    need = min(tlog_cap(p, k, t), p**k) + 1
    return max(1, -(-need // k**k))


def cmd_bench(args) -> int:
    k, t = args.k, args.t
    if k != 2 and not (k == 3 and args.allow_k3):
        raise UsageError("bench supports k=2 (k=3 needs --allow-k3)")
    if t < 1 or args.pmin < 2 or args.pmax < args.pmin:
        raise UsageError("need t >= 1 and a nonempty p range with pmin >= 2")
    if k == 3:
        log.warning("k=3: negative-subset table may reach 2**27 entries")
    seed = _seed(args)
    spec = FamilySpec(Family(args.family))
    rows = []
    for p in range(args.pmin, args.pmax + 1):
        lo = bench_ground_min(k, p, t)
        try:
            inst = _build_for_p(spec, k, p, t, seed, range(lo, lo + 4 * p), args.budget, strict=True)
        except RegregError as exc:
            print(f"p={p}: skipped ({exc})", file=sys.stderr)
            continue
        if inst is None:
            print(f"p={p}: skipped (no regular E within budget)", file=sys.stderr)
            continue
        t0 = time.perf_counter_ns()
        res = solve_structured(inst)
        t_struct = time.perf_counter_ns() - t0
        try:
            t0 = time.perf_counter_ns()
            solve_mitm(inst.values())
            t_mitm = str(time.perf_counter_ns() - t0)
        except TooLarge as exc:
            print(f"p={p}: mitm skipped ({exc})", file=sys.stderr)
            t_mitm = ""
        rows.append(
            {
                "p": p,
                "size": p**k,
                "comparisons": res.comparisons,
                "bound": bound_comparisons(k, p, t),
                "time_struct_ns": t_struct,
                "time_mitm_ns": t_mitm,
            }
        )
    if not rows:
        raise UsageError("every row was skipped")
    out = Path(args.out)
    with open(out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regreg", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="count order-type classes of k-tuples")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--list", action="store_true", help="also list every signature")
    p.set_defaults(func=cmd_classes)

    families = [f.value for f in Family if f is not Family.CUSTOM]

    p = sub.add_parser("sequence", help="write instances H_2 .. H_pmax")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--family", choices=families, default="MIN")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10_000, help="candidate E-sets per p")
    p.add_argument("--ground-min", type=int, default=1, help="E is searched in [m, m + 4p)")
    p.add_argument("-o", "--out", required=True, help="output directory")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("file")
    p.add_argument("--engine", choices=ENGINES, default="structured")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="operation counts and timings over a p range")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--pmin", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--family", choices=families, default="MIN")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--allow-k3", action="store_true")
    p.add_argument("-o", "--out", required=True, help="CSV path")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, RegregError, ValueError) as exc:
        print(f"regreg {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
