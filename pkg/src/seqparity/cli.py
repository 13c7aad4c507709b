"""Command-line interface: generate terms, query parities, verify relations,
and cross-check against OEIS b-files.

Exit codes: 0 success, 1 verification or cross-check failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, catalogue, oeis
from .verify import verify_all, verify_sequences

DEFAULT_N_MAX_CHEAP = 4096
DEFAULT_N_MAX_HEAVY = 512


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit_terms(seq_id: str, start: int, values: list[int], fmt: str) -> None:
    if fmt == "plain":
        sys.stdout.write("".join(f"{v}\n" for v in values))
    elif fmt == "bfile":
        sys.stdout.write("".join(f"{start + i} {v}\n" for i, v in enumerate(values)))
    else:
        record = {"id": seq_id, "from": start, "count": len(values), "terms": values}
        sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def _generate(args: argparse.Namespace) -> tuple[int, list[int]] | int:
    try:
        seq = catalogue.get(args.id)
    except KeyError as exc:
        return _fail(str(exc))
    start = seq.offset if args.start is None else args.start
    if start < seq.offset:
        return _fail(f"{seq.id} starts at index {seq.offset}, --from {start} is below it")
    if args.count < 1:
        return _fail(f"--count must be positive, got {args.count}")
    skip = start - seq.offset
    values = seq.terms(skip + args.count)[skip:]
    return start, values


def cmd_gen(args: argparse.Namespace) -> int:
    result = _generate(args)
    if isinstance(result, int):
        return result
    start, values = result
    _emit_terms(args.id, start, values, args.format)
    return 0


def cmd_parity(args: argparse.Namespace) -> int:
    result = _generate(args)
    if isinstance(result, int):
        return result
    start, values = result
    _emit_terms(args.id, start, [v & 1 for v in values], args.format)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    n_cheap = args.n_max if args.n_max is not None else DEFAULT_N_MAX_CHEAP
    n_heavy = args.n_max_heavy if args.n_max_heavy is not None else DEFAULT_N_MAX_HEAVY
    if args.target == "all":
        report = verify_all(n_cheap, n_heavy)
    else:
        try:
            seq = catalogue.get(args.target)
        except KeyError as exc:
            return _fail(str(exc))
        if seq.claimed is None:
            return _fail(f"no parity relation is catalogued for {seq.id}")
        report = verify_sequences([seq], n_cheap, n_heavy)
    if args.format == "json":
        payload = {
            "meta": {
                "version": __version__,
                "n_max_cheap": report.n_max_cheap,
                "n_max_heavy": report.n_max_heavy,
            },
            "sequences": report.to_records(),
        }
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.all_fitted() else 1


def _load_table(args: argparse.Namespace) -> oeis.BFileTable:
    if args.file is None:
        return oeis.fixture_table(args.id)
    if args.file == "fetch":
        return oeis.fetch_bfile(args.id, args.cache_dir, offline=args.offline)
    path = Path(args.file)
    return oeis.parse_bfile(path.read_text(encoding="utf-8"), args.id)


def cmd_check_bfile(args: argparse.Namespace) -> int:
    try:
        seq = catalogue.get(args.id)
    except KeyError as exc:
        return _fail(str(exc))
    try:
        table = _load_table(args)
    except (OSError, ValueError, oeis.BFileUnavailableError) as exc:
        return _fail(str(exc))
    try:
        mismatches = oeis.cross_check(seq, table, args.limit)
    except oeis.OffsetMismatchError as exc:
        print(f"offset mismatch: {exc}", file=sys.stderr)
        return 1
    checked = min(args.limit, len(table))
    for index, expected, actual in mismatches:
        print(f"{index} expected {expected} got {actual}")
    print(f"{seq.id}: checked {checked} terms, {len(mismatches)} mismatches")
    return 0 if not mismatches else 1


def cmd_fetch_bfile(args: argparse.Namespace) -> int:
    try:
        table = oeis.fetch_bfile(args.id, args.cache_dir, offline=args.offline)
    except (ValueError, oeis.BFileUnavailableError) as exc:
        return _fail(str(exc))
    sys.stdout.write(oeis.serialize_bfile(table))
    return 0


def _add_generation_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("id", help="sequence id (e.g. A061297, or 'm' for the master sequence)")
    parser.add_argument("--from", dest="start", type=int, default=None,
                        help="first index to emit (default: the sequence offset)")
    parser.add_argument("--count", type=int, default=20, help="number of terms")
    parser.add_argument("--format", choices=["plain", "bfile", "json"],
                        default="plain", help="output format")


def _add_network_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cache-dir", default=None,
                        help="b-file cache directory (default: $SEQPARITY_CACHE_DIR "
                             "or ~/.cache/seqparity)")
    parser.add_argument("--offline", dest="offline", action="store_true", default=True,
                        help="never touch the network (default)")
    parser.add_argument("--online", dest="offline", action="store_false",
                        help="allow fetching b-files from oeis.org")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqparity",
        description="Generate integer sequences and verify their parity relations "
                    "against the master sequence.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="print terms of a catalogued sequence")
    _add_generation_flags(gen)
    gen.set_defaults(func=cmd_gen)

    par = sub.add_parser("parity", help="print the parity bits of a sequence's terms")
    _add_generation_flags(par)
    par.set_defaults(func=cmd_parity)

    ver = sub.add_parser("verify", help="check claimed parity relations and fit the true ones")
    ver.add_argument("target", help="sequence id or 'all'")
    ver.add_argument("--n-max", type=int, default=None,
                     help=f"range bound for cheap sequences (default {DEFAULT_N_MAX_CHEAP})")
    ver.add_argument("--n-max-heavy", type=int, default=None,
                     help=f"range bound for big-integer sequences (default {DEFAULT_N_MAX_HEAVY})")
    ver.add_argument("--format", choices=["plain", "json"], default="plain")
    ver.set_defaults(func=cmd_verify)

    chk = sub.add_parser("check-bfile", help="cross-check a generator against b-file data")
    chk.add_argument("id", help="OEIS sequence id")
    chk.add_argument("--file", default=None,
                     help="b-file path, or 'fetch' to retrieve; default: bundled fixture")
    chk.add_argument("--limit", type=int, default=10_000,
                     help="maximum number of rows to compare")
    _add_network_flags(chk)
    chk.set_defaults(func=cmd_check_bfile)

    fetch = sub.add_parser("fetch-bfile", help="print a sequence's b-file, caching it locally")
    fetch.add_argument("id", help="OEIS sequence id")
    _add_network_flags(fetch)
    fetch.set_defaults(func=cmd_fetch_bfile)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
