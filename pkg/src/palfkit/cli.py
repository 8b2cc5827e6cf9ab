"""Command-line interface.

Exit status: 0 on success, 1 when a family verification fails, 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .grammar import ParseError, parse_laurent, parse_mapping_class, parse_monodromy, parse_presentation, parse_surface
from .knots import NormalizedAlexander, alexander_from_presentation, casson_surgery
from .lefschetz import allowable, boundary_is_homology_sphere, homology, mazur_family, pi1_presentation
from .presentation import simplify_presentation
from .report import build_family_report, homology_summary, report_to_json, report_to_text

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palfkit",
        description="Exact invariants of planar Lefschetz fibrations and the standard Mazur-type family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_family = sub.add_parser("family", help="verify the family against its closed forms")
    p_family.add_argument("--n-max", type=int, required=True, metavar="N")
    p_family.add_argument("--json", action="store_true", help="emit the JSON report")
    p_family.add_argument("--output", type=Path, default=None, help="write the report to a file")

    p_palf = sub.add_parser("palf", help="invariants of a monodromy description")
    p_palf.add_argument("--input", type=Path, required=True, metavar="FILE")
    p_palf.add_argument("--json", action="store_true")

    p_alex = sub.add_parser("alexander", help="Alexander polynomial of a deficiency-one presentation")
    p_alex.add_argument("--presentation", required=True, metavar="STR")

    p_casson = sub.add_parser("casson", help="Casson invariant after 1/m surgery")
    p_casson.add_argument("--delta", required=True, metavar="STR", help="normalized Alexander polynomial")
    p_casson.add_argument("--m", type=int, required=True)
    p_casson.add_argument("--lambda0", type=int, default=0, help="Casson invariant of the starting sphere")

    p_twist = sub.add_parser("twist", help="evaluate a mapping-class expression")
    p_twist.add_argument("--surface", required=True, metavar="S(0,r)")
    p_twist.add_argument("--expr", required=True, metavar="EXPR")
    return parser


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        print(text)
    else:
        output.write_text(text + "\n", encoding="utf-8")


def _cmd_family(args) -> int:
    if args.n_max < 1:
        print("error: --n-max must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    report = build_family_report(args.n_max, family=mazur_family)
    _emit(report_to_json(report) if args.json else report_to_text(report), args.output)
    if not report.all_pass:
        failing = [row.n for row in report.rows if not row.passes]
        print(f"error: family verification failed at n = {failing}", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def _cmd_palf(args) -> int:
    spec = parse_monodromy(args.input.read_text(encoding="utf-8"))
    ok_allowable, witness = allowable(spec)
    hom = homology(spec)
    verdict = simplify_presentation(pi1_presentation(spec)).verdict
    fields = {
        "surface": str(spec.fiber),
        "cycles": len(spec.cycles),
        "allowable": ok_allowable,
        "offending_cycle": witness,
        "homology": homology_summary(hom),
        "chi": hom.euler,
        "boundary_homology_sphere": boundary_is_homology_sphere(spec),
        "pi1": verdict,
    }
    if args.json:
        print(json.dumps(fields, indent=2, sort_keys=True))
    else:
        for key, value in fields.items():
            print(f"{key}: {value}")
    return EXIT_OK


def _cmd_alexander(args) -> int:
    presentation = parse_presentation(args.presentation)
    poly = alexander_from_presentation(presentation, [1] * presentation.rank)
    print(poly)
    return EXIT_OK


def _cmd_casson(args) -> int:
    delta = NormalizedAlexander.from_laurent(parse_laurent(args.delta))
    print(casson_surgery(args.lambda0, args.m, delta))
    return EXIT_OK


def _cmd_twist(args) -> int:
    surface = parse_surface(args.surface)
    phi = parse_mapping_class(args.expr, surface)
    for name, image in zip(surface.group.names, phi.images):
        print(f"{name} -> {image}")
    return EXIT_OK


_COMMANDS = {
    "family": _cmd_family,
    "palf": _cmd_palf,
    "alexander": _cmd_alexander,
    "casson": _cmd_casson,
    "twist": _cmd_twist,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
