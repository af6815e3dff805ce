"""Command-line entry point: ``chandas identify|file|eval``."""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path
from typing import List, Optional

from ..errors import ChandasError, ConfigError, FileUnreadable, UndetectableScheme
from ..sanskrit_text.schemes import Scheme
from .evaluation import run_error_injection_eval
from .pipeline import FORMATS, MODES, RunConfig, process_file, process_text
from .render import dumps_canonical, render_report

EXIT_OK, EXIT_IO, EXIT_CONFIG = 0, 1, 2


def _scheme(value: str) -> Optional[Scheme]:
    if value.lower() in ("auto", "match", "match-input"):
        return None
    try:
        return Scheme.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def argparser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=MODES, default="line")
    common.add_argument("--scheme", type=_scheme, default=None,
                        help="input scheme (default: detect)")
    common.add_argument("--output-scheme", type=_scheme, default=None,
                        help="output scheme (default: same as input)")
    common.add_argument("--k", type=_positive, default=10,
                        help="number of fuzzy matches per line")
    common.add_argument("--db", type=Path, default=None,
                        help="meter definition TSV (CHANDAS_DB overrides)")
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--out", type=Path, default=None,
                        help="write the report here instead of stdout")

    ap = argparse.ArgumentParser(prog="chandas",
                                 description="Identify the meter of Sanskrit verse.")
    sub = ap.add_subparsers(dest="command", required=True)
    ident = sub.add_parser("identify", parents=[common],
                           help="identify text given as arguments or on stdin")
    ident.add_argument("text", nargs="*")
    fil = sub.add_parser("file", parents=[common], help="identify every line of a file")
    fil.add_argument("path", type=Path)
    ev = sub.add_parser("eval", parents=[common], help="synthetic error-injection run")
    ev.add_argument("--trials", type=_positive, default=500)
    ev.add_argument("--edits", type=int, default=1)
    ev.add_argument("--seed", type=int, default=0)
    return ap


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise FileUnreadable(f"cannot write {out}: {exc}") from exc


def run(args: argparse.Namespace) -> int:
    config = RunConfig.from_env(
        mode=args.mode, input_scheme=args.scheme, output_scheme=args.output_scheme,
        k=args.k, db_path=args.db, output_format=args.format,
    )
    if args.command == "eval":
        if args.edits < 0:
            raise ConfigError("--edits must be non-negative")
        result = run_error_injection_eval(config, args.trials, args.edits, args.seed)
        if args.format == "detailed":
            _write(dumps_canonical(result.as_dict()), args.out)
        else:
            _write(f"trials {result.trials}, edits {result.edits}, k {result.k}\n"
                   f"verse accuracy {result.verse_accuracy:.4f}\n"
                   f"top-{result.k} rate {result.topk_rate:.4f}\n", args.out)
        return EXIT_OK

    if args.command == "file":
        report = process_file(config, args.path)
    else:
        text = " ".join(args.text) if args.text else sys.stdin.read()
        report = process_text(config, text)
    _write(render_report(report), args.out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = argparser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return run(args)
    except (ConfigError, UndetectableScheme) as exc:
        print(f"chandas: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (FileUnreadable, OSError) as exc:
        print(f"chandas: {exc}", file=sys.stderr)
        return EXIT_IO
    except ChandasError as exc:
        print(f"chandas: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
