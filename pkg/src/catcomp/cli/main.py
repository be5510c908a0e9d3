"""Argument parsing and file handling for the ``catcomp`` command line."""

from __future__ import annotations

import argparse
from collections.abc import Sequence
from pathlib import Path

from catcomp.cli.commands import COMMANDS, EXIT_ERROR, Report, RunFlags, run
from catcomp.cli.documents import Document, parse_documents
from catcomp.config import load_settings, repo_root
from catcomp.endoalg import Direction
from catcomp.errors import ConfigError, ParseError
from catcomp.logs import configure_logging, get_logger

log = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catcomp", description="Check comprehension structures on finite categories.")
    parser.add_argument("command", help=", ".join(sorted(COMMANDS)))
    parser.add_argument(
        "inputs",
        nargs="*",
        help="Document files, or an inline instance such as: pow universe=0,1,2 base=0 edges=0-1,1-2",
    )
    parser.add_argument("--target", action="append", default=[], help="Document name to act on (repeatable)")
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.add_argument("--budget", type=int, default=None, help="Override the adjoint and algebra search budgets")
    parser.add_argument("--seed", type=int, default=None, help="check-category: generate a category from this seed")
    parser.add_argument(
        "--direction",
        choices=[d.value for d in Direction],
        default=Direction.ALGEBRA.value,
        help="lift-to-algebras and check-transport: algebra or coalgebra",
    )
    parser.add_argument("--out", default=None, help="Also write the report here (must be inside repo root)")
    parser.add_argument("--config", default=None, help="Settings JSON (default: config/catcomp.json)")
    return parser


def _assert_within_repo(path: Path, root: Path) -> None:
    try:
        path.resolve().relative_to(root.resolve())
    except Exception as exc:
        raise ValueError(f"output path escapes repo root: {path}") from exc


def read_inputs(inputs: Sequence[str]) -> list[Document]:
    """Files are parsed as documents; anything else is read as one inline instance line."""
    paths = [Path(arg) for arg in inputs]
    if inputs and all(p.is_file() for p in paths):
        documents: list[Document] = []
        for p in paths:
            try:
                documents.extend(parse_documents(p.read_text(encoding="utf-8")))
            except ParseError as exc:
                raise ParseError(f"{p}: {exc}") from exc
        return documents
    if not inputs:
        return []
    return parse_documents("instance " + " ".join(inputs))


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(Path(args.config) if args.config else None)
    except ConfigError as exc:
        print(f"ERROR: {exc}")
        return EXIT_ERROR
    configure_logging(settings.log_level)

    flags = RunFlags(json=args.json, budget=args.budget, seed=args.seed, direction=args.direction)
    try:
        documents = read_inputs(args.inputs)
    except ParseError as exc:
        report = Report(args.command, tuple(args.target), exit_status=EXIT_ERROR, error=str(exc))
    else:
        report = run(args.command, documents, flags, targets=args.target, settings=settings)

    rendered = report.render(as_json=args.json)
    print(rendered)
    if args.out:
        root = repo_root()
        out_path = Path(args.out)
        if not out_path.is_absolute():
            out_path = root / out_path
        out_path = out_path.resolve()
        _assert_within_repo(out_path, root)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(rendered + "\n", encoding="utf-8")
        print(f"WROTE: {out_path}")
    log.debug("exit", extra={"exit_status": report.exit_status})
    return report.exit_status
