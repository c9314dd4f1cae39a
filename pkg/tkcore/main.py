import argparse
import sys

from pydantic import ValidationError

from tkcore import __version__
from tkcore.cli.commands import bench, query, stats, verify
from tkcore.core.config import settings
from tkcore.core.errors import TkcError, UsageError
from tkcore.core.logging import get_logger

logger = get_logger(__name__)

COMMANDS = (stats, query, verify, bench)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Enumerate distinct temporal k-cores of a time range."
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def check_threads() -> None:
    if settings.THREADS != 1:
        raise UsageError(
            f"TKC_THREADS={settings.THREADS} is not supported; "
            "queries run on one thread")


def main(argv: list[str] | None = None) -> int:
    """Run one command; return 0 ok, 1 mismatch, 2 usage, 3 input error."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        check_threads()
        return args.handler(args)
    except ValidationError as exc:
        errors = "; ".join(error["msg"] for error in exc.errors())
        print(f"error: invalid query: {errors}", file=sys.stderr)
        return UsageError.exit_code
    except TkcError as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
