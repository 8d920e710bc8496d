"""Command-line entry point.

Exit codes: 0 success, 1 mismatch (verify/oracle), 2 usage or guard
refusal, 3 internal consistency failure (non-integer or asymmetric result).
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from hypermaps.cache import load_cache, read_records, save_cache
from hypermaps.fseries import FGrid
from hypermaps.formats import FORMATS, render
from hypermaps.henum import NonIntegerResult, totals
from hypermaps.interpolate import CoeffTable, InterpolationError
from hypermaps.oracle import NonDivisibleBucket, brute_force_table
from hypermaps.pipeline import compute_table
from hypermaps.reference import REFERENCE_DARTS, reference_table

log = logging.getLogger("hypermaps")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_CACHE = ".fcache"
DEFAULT_ORACLE_CUTOFF = 6


def default_threads() -> int:
    env = os.environ.get("HYPERMAP_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer HYPERMAP_THREADS=%r", env)
    return os.cpu_count() or 1


@dataclass
class RunConfig:
    command: str
    darts: int = 1
    fmt: str = "csv"
    threads: int = 1
    cache: Optional[Path] = None
    oracle_cutoff: int = DEFAULT_ORACLE_CUTOFF
    force: bool = False
    quiet: bool = False
    clear: bool = False

    def __post_init__(self):
        if self.darts < 1:
            raise ValueError(f"darts must be >= 1, got {self.darts}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")


def _status(cfg: RunConfig, msg: str) -> None:
    if not cfg.quiet:
        print(msg, file=sys.stderr)


def _table(cfg: RunConfig) -> CoeffTable:
    grid = load_cache(cfg.cache) if cfg.cache else FGrid()
    before = len(grid)
    table, stats = compute_table(cfg.darts, threads=cfg.threads, grid=grid)
    if cfg.cache and len(grid) != before:
        save_cache(cfg.cache, grid)
    _status(cfg, stats.summary())
    return table


def first_mismatch(got: CoeffTable, want: CoeffTable) -> Optional[str]:
    """Describe the first differing row (missing, extra or wrong count)."""
    for key in sorted(set(got.entries) | set(want.entries)):
        g, w = got.entries.get(key), want.entries.get(key)
        if g != w:
            return f"(v,e,f)={key}: computed {g}, reference {w}"
    return None


def cmd_table(cfg: RunConfig) -> int:
    table = _table(cfg)
    sys.stdout.write(render(table, cfg.fmt))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.darts not in REFERENCE_DARTS:
        print(f"no reference table for r={cfg.darts}; available: {list(REFERENCE_DARTS)}", file=sys.stderr)
        return EXIT_USAGE
    table = _table(cfg)
    problem = first_mismatch(table, reference_table(cfg.darts))
    if problem is not None:
        print(f"verify r={cfg.darts}: MISMATCH {problem}")
        return EXIT_MISMATCH
    if not cfg.quiet:
        print(f"verify r={cfg.darts}: OK ({len(table)} rows, total {table.total()})")
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    if cfg.darts > cfg.oracle_cutoff and not cfg.force:
        print(
            f"r={cfg.darts} exceeds the oracle cutoff {cfg.oracle_cutoff}; pass --force to run anyway",
            file=sys.stderr,
        )
        return EXIT_USAGE
    start = time.perf_counter()
    brute = brute_force_table(cfg.darts, workers=cfg.threads)
    _status(cfg, f"brute force r={cfg.darts}: {time.perf_counter() - start:.2f}s")
    table = _table(cfg)
    problem = first_mismatch(table, brute)
    if problem is not None:
        print(f"oracle r={cfg.darts}: MISMATCH {problem.replace('reference', 'brute force')}")
        return EXIT_MISMATCH
    if not cfg.quiet:
        print(f"oracle r={cfg.darts}: OK ({len(table)} rows)")
    return EXIT_OK


def cmd_totals(cfg: RunConfig) -> int:
    for value in totals(cfg.darts):
        print(value)
    return EXIT_OK


def cmd_cache(cfg: RunConfig) -> int:
    path = cfg.cache or Path(DEFAULT_CACHE)
    if cfg.clear:
        try:
            path.unlink()
            print(f"removed {path}")
        except FileNotFoundError:
            print(f"no cache at {path}")
        return EXIT_OK
    if not path.exists():
        print(f"no cache at {path}")
        return EXIT_OK
    records = read_records(path.read_bytes())
    points = {key[1:] for key in records}
    kmax = max((key[0] for key in records), default=0)
    print(f"{path}: {len(records)} values at {len(points)} points, max order {kmax}")
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "totals": cmd_totals,
    "cache": cmd_cache,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $HYPERMAP_THREADS or CPU count)")
    common.add_argument("--cache", default=DEFAULT_CACHE,
                        help=f"F-value cache file (default: {DEFAULT_CACHE})")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--quiet", "-q", action="store_true")

    parser = argparse.ArgumentParser(
        prog="hypermaps",
        description="Count rooted hypermaps by vertices, edges and faces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="compute and print the table for r darts")
    p.add_argument("--darts", "-r", type=int, required=True)
    p.add_argument("--format", dest="fmt", choices=sorted(FORMATS), default="csv")

    p = sub.add_parser("verify", parents=[common], help="compare against the embedded reference tables")
    p.add_argument("--darts", "-r", type=int, required=True)

    p = sub.add_parser("oracle", parents=[common], help="compare against brute-force enumeration")
    p.add_argument("--darts", "-r", type=int, required=True)
    p.add_argument("--force", action="store_true", help="run above the cutoff")
    p.add_argument("--cutoff", type=int, default=DEFAULT_ORACLE_CUTOFF)

    p = sub.add_parser("totals", parents=[common], help="print total counts for r = 1..max")
    p.add_argument("--max", dest="darts", type=int, required=True)

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the F-value cache")
    p.add_argument("--clear", action="store_true")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    threads = args.threads if args.threads is not None else default_threads()
    return RunConfig(
        command=args.command,
        darts=getattr(args, "darts", 1),
        fmt=getattr(args, "fmt", "csv"),
        threads=threads,
        cache=None if args.no_cache else Path(args.cache),
        oracle_cutoff=getattr(args, "cutoff", DEFAULT_ORACLE_CUTOFF),
        force=getattr(args, "force", False),
        quiet=args.quiet,
        clear=getattr(args, "clear", False),
    )


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = parse_config(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.command](cfg)
    except (NonIntegerResult, InterpolationError, NonDivisibleBucket) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
