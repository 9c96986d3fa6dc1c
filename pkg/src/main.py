#!/usr/bin/env python3
"""
fmre - feature model reverse engineering
Command-line entry point: validate, fmt, recognize, slice, export, classify
and import-check
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from analyzer import (
    Recognition,
    classify_model,
    feature_type_mining,
    format_classification,
    format_meaning,
)
from config.settings import Settings
from dsl.parser import parse
from dsl.printer import print_canonical
from error_handling import ErrorHandler, ExitStatus
from export import ExportFormat, decode_json, export
from featuremodel.diagnostics import Diagnostic, errors_only
from featuremodel.errors import ModelValidationError, SchemaError
from featuremodel.model import FeatureModel
from featuremodel.validation import validate
from slicing import Direction, Relation, SliceQuery, slice_model
from utils.logger import get_logger, setup_logger

__version__ = "1.0.0"

logger = get_logger(__name__)

SLICE_EXTENSIONS = {"fm": "fm", "dot": "dot", "json": "json"}

_COLORS = {"error": "\033[31m", "warning": "\033[33m"}
_RESET = "\033[0m"


def clear_slices(out_dir: Path):
    """Remove slice files left in `out_dir` by an earlier run"""
    for path in out_dir.glob("slice-*.*"):
        index = path.stem[len("slice-") :]
        if index.isdigit() and path.suffix[1:] in SLICE_EXTENSIONS.values():
            path.unlink()
            logger.debug(f"Removed stale {path}")


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser for CLI"""
    parser = argparse.ArgumentParser(
        prog="fmre",
        description="Feature model reverse engineering: pattern recognition and slicing",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Check a model for structural problems
  fmre validate corpus/list.fm

  # Kind and meaning of a feature
  fmre recognize corpus/list.fm --feature St-Queue

  # Forward AND slices, one file per slice
  fmre slice corpus/list.fm --feature static-list --direction forward --relation and -o out/

  # Forward OR slice with an alternative feature
  fmre slice corpus/list.fm --feature static-list --relation or --alt static_queue -o out/

  # Export to JSON and check the result
  fmre export corpus/list.fm --format json | fmre import-check
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log debug output to stderr"
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Console log level (default: from configuration, WARNING)",
    )
    parser.add_argument("--log-file", default=None, help="Also log to this file")

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    validate_cmd = commands.add_parser("validate", help="Report model diagnostics")
    validate_cmd.add_argument("path", help="Model file (.fm)")

    fmt_cmd = commands.add_parser("fmt", help="Print the canonical form of a model")
    fmt_cmd.add_argument("path", help="Model file (.fm)")
    fmt_cmd.add_argument(
        "-w", "--write", action="store_true", help="Rewrite the file in place"
    )

    recognize_cmd = commands.add_parser("recognize", help="Classify one feature")
    recognize_cmd.add_argument("path", help="Model file (.fm)")
    recognize_cmd.add_argument("--feature", required=True, help="Feature to recognize")
    recognize_cmd.add_argument("--format", choices=["text", "json"], default="text")

    slice_cmd = commands.add_parser("slice", help="Compute forward or backward slices")
    slice_cmd.add_argument("path", help="Model file (.fm)")
    slice_cmd.add_argument("--feature", required=True, help="Selected feature")
    slice_cmd.add_argument(
        "--direction", choices=[d.value for d in Direction], default=Direction.FORWARD.value
    )
    slice_cmd.add_argument(
        "--relation", choices=[r.value for r in Relation], default=Relation.AND.value
    )
    slice_cmd.add_argument(
        "--alt",
        action="append",
        default=[],
        metavar="FEATURE",
        help="Alternative feature (OR relation only, repeatable)",
    )
    slice_cmd.add_argument(
        "-o", "--out-dir", default="slices", help="Directory for slice files (default: slices)"
    )
    slice_cmd.add_argument(
        "--format", choices=list(SLICE_EXTENSIONS), default=None, help="Slice file format"
    )
    slice_cmd.add_argument(
        "--meaning",
        action="store_true",
        help="Print the kind and meaning of the selected feature first",
    )

    export_cmd = commands.add_parser("export", help="Serialize a model to DOT or JSON")
    export_cmd.add_argument("path", help="Model file (.fm)")
    export_cmd.add_argument("--format", choices=[f.value for f in ExportFormat], default=None)

    classify_cmd = commands.add_parser("classify", help="Classify every feature of a model")
    classify_cmd.add_argument("path", help="Model file (.fm)")
    classify_cmd.add_argument("--format", choices=["text", "json"], default="text")

    check_cmd = commands.add_parser("import-check", help="Validate a JSON export")
    check_cmd.add_argument("path", nargs="?", default="-", help="JSON file (default: stdin)")

    return parser


class Cli:
    """Runs one command with resolved settings"""

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.color = settings.color and sys.stderr.isatty()

    # input/output helpers

    def read_input(self, path: str) -> str:
        """Read text from a file or stdin"""
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")

    def load_model(self) -> FeatureModel:
        return parse(self.read_input(self.args.path))

    def load_valid_model(self) -> FeatureModel:
        model = self.load_model()
        problems = errors_only(validate(model))
        if problems:
            raise ModelValidationError(problems)
        return model

    def report(self, diagnostics: Sequence[Diagnostic]):
        for diagnostic in diagnostics:
            line = diagnostic.format(self.args.path)
            if self.color:
                severity = diagnostic.severity.value
                line = line.replace(
                    f" {severity}:", f" {_COLORS[severity]}{severity}{_RESET}:", 1
                )
            print(line, file=sys.stderr)

    # commands

    def cmd_validate(self) -> int:
        diagnostics = validate(self.load_model())
        self.report(diagnostics)
        return ExitStatus.INPUT_ERROR if errors_only(diagnostics) else ExitStatus.OK

    def cmd_fmt(self) -> int:
        text = print_canonical(self.load_model())
        if self.args.write:
            Path(self.args.path).write_text(text, encoding="utf-8")
            logger.info(f"Formatted {self.args.path}")
        else:
            sys.stdout.write(text)
        return ExitStatus.OK

    def cmd_recognize(self) -> int:
        model = self.load_valid_model()
        recognition = feature_type_mining(
            model, self.args.feature, fuzzy=self.settings["fuzzy_names"]
        )
        if self.args.format == "json":
            print(json.dumps(recognition.to_dict(), indent=2, ensure_ascii=False))
        else:
            sys.stdout.write(format_meaning(recognition))
        return ExitStatus.OK

    def cmd_slice(self) -> int:
        query = SliceQuery(
            feature=self.args.feature,
            direction=Direction(self.args.direction),
            relation=Relation(self.args.relation),
            alternatives=tuple(self.args.alt),
        )
        model = self.load_valid_model()
        result = slice_model(model, query, fuzzy=self.settings["fuzzy_names"])

        fmt = self.args.format or self.settings["slice_format"]
        out_dir = Path(self.args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        clear_slices(out_dir)
        for index, piece in enumerate(result.slices, start=1):
            path = out_dir / f"slice-{index}.{SLICE_EXTENSIONS[fmt]}"
            if fmt == "fm":
                text = print_canonical(piece)
            else:
                text = export(piece, ExportFormat(fmt))
            path.write_text(text, encoding="utf-8")
            logger.debug(f"Wrote {path}")

        if self.args.meaning and result.kind is not None and result.meaning is not None:
            sys.stdout.write(format_meaning(Recognition(result.kind, result.meaning)))
        print(f"{len(result)} slice(s)")
        return ExitStatus.OK

    def cmd_export(self) -> int:
        model = self.load_valid_model()
        fmt = ExportFormat(self.args.format or self.settings["export_format"])
        sys.stdout.write(export(model, fmt))
        return ExitStatus.OK

    def cmd_classify(self) -> int:
        rows = classify_model(self.load_valid_model())
        if self.args.format == "json":
            payload = [{"name": name, "kind": kind.value} for name, kind in rows]
            print(json.dumps(payload, indent=2, ensure_ascii=False))
        else:
            sys.stdout.write(format_classification(rows))
        return ExitStatus.OK

    def cmd_import_check(self) -> int:
        model, diagnostics = decode_json(self.read_input(self.args.path))
        if model is None:
            raise SchemaError(diagnostics)
        problems = validate(model)
        self.report(problems)
        if errors_only(problems):
            return ExitStatus.INPUT_ERROR
        print(f"{model.name}: {len(model)} feature(s)")
        return ExitStatus.OK


COMMANDS: Dict[str, Callable[[Cli], int]] = {
    "validate": Cli.cmd_validate,
    "fmt": Cli.cmd_fmt,
    "recognize": Cli.cmd_recognize,
    "slice": Cli.cmd_slice,
    "export": Cli.cmd_export,
    "classify": Cli.cmd_classify,
    "import-check": Cli.cmd_import_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    settings = Settings(
        overrides={
            "log_level": "DEBUG" if args.verbose else args.log_level,
            "log_file": args.log_file,
        }
    )
    setup_logger(level=settings["log_level"], log_file=settings["log_file"] or None)
    handler = ErrorHandler(log_file=settings["log_file"] or None)

    cli = Cli(args, settings)
    try:
        return int(COMMANDS[args.command](cli))
    except Exception as e:
        info = handler.handle_error(e, command=args.command, path=getattr(args, "path", None))
        print(info.user_message, file=sys.stderr)
        return int(info.exit_status)


if __name__ == "__main__":
    sys.exit(main())
