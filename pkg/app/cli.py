"""Command-line front end: derive, expand, render, verify and catalog."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from pydantic import TypeAdapter

from app.checkers.catalog_checker import CatalogChecker
from app.config import get_settings
from app.derivation.boundary_deriver import derive_boundary_system
from app.errors import (
    CatalogFormatError,
    InvalidBoundarySystemError,
    InvalidFoldingCurveError,
    LengthCapExceeded,
    WordParseError,
)
from app.extractors.catalog_extractor import CatalogExtractor
from app.geometry.turtle import boundary_start_headings, render_boundary, render_fold
from app.models.dir_word import KEY_ORDER, BoundarySystem, DirWord
from app.models.fold_letter import FoldLetter
from app.models.fold_word import FoldingSystem
from app.models.lattice import GridPoint, Heading
from app.models.verification_report import CatalogResult, VerificationReport
from app.oracle.boundary_verifier import BoundaryVerifier
from app.renderers.svg_renderer import (
    FOLD_COLOR,
    LEFT_BOUNDARY_COLOR,
    RIGHT_BOUNDARY_COLOR,
    SvgRenderer,
)
from app.words.dir_words import parse_dir_word
from app.words.expander import Expander

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_REDUCTION = 3
EXIT_CAP = 4

FOLD_AXIOMS = ("A", "B")


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = get_settings().log_level.upper()
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")
        log.info("wrote %s", out)


def cmd_derive(args: argparse.Namespace) -> int:
    tau = derive_boundary_system(FoldingSystem.from_sigma(args.sigma))
    for key in KEY_ORDER:
        print(f"{key}={tau[key]}")
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    system = FoldingSystem.from_sigma(args.sigma)
    expander = Expander(args.cap)
    if args.axiom in FOLD_AXIOMS:
        word = expander.expand_fold(system, FoldLetter(args.axiom), args.level)
    else:
        tau = derive_boundary_system(system)
        word = expander.expand_boundary(tau, parse_dir_word(args.axiom), args.level)
    print(word)
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    system = FoldingSystem.from_sigma(args.sigma)
    if args.with_boundary and args.axiom != "A":
        raise ValueError("--with-boundary draws the boundary of the A curve only")
    expander = Expander(args.cap)
    fold = expander.expand_fold(system, FoldLetter(args.axiom), args.level)
    origin = GridPoint(0, 0)
    layers = [(render_fold(fold, origin, Heading.EAST), FOLD_COLOR)]

    if args.with_boundary:
        tau = derive_boundary_system(system)
        left_heading, right_heading = boundary_start_headings(Heading.EAST)
        left = expander.expand_boundary(tau, DirWord("R"), args.level)
        right = expander.expand_boundary(tau, DirWord("L"), args.level)
        layers += [
            (render_boundary(left, origin, left_heading), LEFT_BOUNDARY_COLOR),
            (render_boundary(right, origin, right_heading), RIGHT_BOUNDARY_COLOR),
        ]

    svg = SvgRenderer(args.scale, rounded=args.rounded).render(layers)
    _write(svg, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    name = args.name
    if args.system:
        try:
            record = CatalogExtractor(args.catalog).get_record(args.system)
        except KeyError as e:
            raise ValueError(e.args[0]) from e
        system = record.folding_system()
        name = name or record.name
    else:
        system = FoldingSystem.from_sigma(args.sigma)
    if args.tau:
        tau = BoundarySystem.from_text(args.tau)
    else:
        tau = derive_boundary_system(system)
    reports = BoundaryVerifier(system, tau, name, args.cap).verify_levels(
        args.max_level
    )

    if args.json:
        adapter = TypeAdapter(list[VerificationReport])
        dumped = adapter.dump_json(reports, by_alias=True, exclude_none=True, indent=2)
        print(dumped.decode())
    else:
        for report in reports:
            print(report.describe())
    passed = bool(reports) and all(report.passed for report in reports)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_catalog(args: argparse.Namespace) -> int:
    records = CatalogExtractor(args.catalog).extract()
    results = CatalogChecker(args.cap, args.max_level).check_all(records)

    if args.json:
        adapter = TypeAdapter(list[CatalogResult])
        dumped = adapter.dump_json(results, by_alias=True, exclude_none=True, indent=2)
        print(dumped.decode())
    else:
        if results:
            print(CatalogChecker.to_frame(results).to_markdown(index=False))
        print(f"{len(results)} systems")

    failed = [result.system for result in results if not result.passed]
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foldbound",
        description="Boundary L-systems of square-grid folding curves",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    cap = argparse.ArgumentParser(add_help=False)
    cap.add_argument(
        "--cap", type=_positive_int, default=None, help="maximum word length"
    )

    sigma = argparse.ArgumentParser(add_help=False)
    sigma.add_argument("--sigma", required=True, help="sigma(A), e.g. A-B")

    derive = subparsers.add_parser("derive", parents=[sigma], help="print tau")
    derive.set_defaults(handler=cmd_derive)

    expand = subparsers.add_parser(
        "expand", parents=[sigma, cap], help="print an expanded word"
    )
    expand.add_argument("--level", type=_nonnegative_int, required=True)
    expand.add_argument(
        "--axiom", default="A", choices=FOLD_AXIOMS + KEY_ORDER, help="start letter"
    )
    expand.set_defaults(handler=cmd_expand)

    render = subparsers.add_parser("render", parents=[sigma, cap], help="write SVG")
    render.add_argument("--level", type=_nonnegative_int, required=True)
    render.add_argument("--axiom", default="A", choices=FOLD_AXIOMS)
    render.add_argument("--with-boundary", action="store_true")
    render.add_argument("--scale", type=_positive_int, default=None)
    render.add_argument("--rounded", action="store_true", help="round line joins")
    render.add_argument("--out", type=Path, default=None)
    render.set_defaults(handler=cmd_render)

    verify = subparsers.add_parser(
        "verify", parents=[cap], help="check tau against the swept region"
    )
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--sigma", help="sigma(A), e.g. A-B")
    source.add_argument("--system", help="name of a catalog system")
    verify.add_argument("--catalog", type=Path, default=None)
    verify.add_argument("--max-level", type=_nonnegative_int, required=True)
    verify.add_argument("--tau", default=None, help="L=..,R=..,l=..,r=..,S=..,s=..")
    verify.add_argument("--name", default=None)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    catalog = subparsers.add_parser(
        "catalog", parents=[cap], help="derive and verify every catalog system"
    )
    catalog.add_argument("--catalog", type=Path, default=None)
    catalog.add_argument("--max-level", type=_nonnegative_int, default=None)
    catalog.add_argument("--json", action="store_true")
    catalog.set_defaults(handler=cmd_catalog)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (WordParseError, InvalidBoundarySystemError, CatalogFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidFoldingCurveError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_REDUCTION
    except LengthCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
