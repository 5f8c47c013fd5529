"""
Command-line front door: build spaces, compute invariants and pi_1, sample
the knot, and run the whole claim chain.

Every command returns a CommandOutcome; main() prints its report to stdout
and turns its exit code into the process status (0 ok, 1 check failed or bad
input, 2 usage error). Logs go to stderr.
"""

import argparse
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Sequence

from core.complex.delta_complex import (
    DeltaComplex,
    boundary_subcomplex,
    connected_components,
    euler_characteristic,
    require_valid,
)
from core.complex.serialization import COMPLEX_KIND, complex_from_json, complex_to_json
from core.config import settings
from core.errors import KnotConfigError, TopologyError
from core.fundamental.fundamental_group import presentation as pi1_presentation
from core.groups.presentation import (
    PRESENTATION_KIND,
    abelianization,
    presentation_from_json,
    presentation_to_json,
)
from core.groups.tietze import is_trivial_certified
from core.groups.torus import match_torus_relator
from core.homology.homology import homology, homology_signature, homology_to_json
from core.knots.geometry import KnotCurveConfig, KnotVariant, knot_report
from core.report.claims import run_claims
from core.spaces.builders import Space, SpaceName, build_space
from core.utils.helpers import read_json, to_json_text, write_json
from core.utils.log import configure_logging, get_logger

logger = get_logger("CLI")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ExitCode(IntEnum):
    OK = 0
    CHECK_FAILED = 1
    USAGE = 2


@dataclass
class CommandOutcome:
    exit_code: ExitCode
    report: str

    @classmethod
    def emit(cls, exit_code: ExitCode, payload: Any, text: str, as_json: bool) -> "CommandOutcome":
        return cls(exit_code, to_json_text(payload) if as_json else text)

    @classmethod
    def failure(cls, exit_code: ExitCode, message: str, as_json: bool) -> "CommandOutcome":
        return cls.emit(exit_code, {"error": message}, f"error: {message}", as_json)


def _space_document(space: Space) -> Dict[str, Any]:
    if isinstance(space, DeltaComplex):
        return complex_to_json(space)
    return presentation_to_json(space)


def _load_document(path: Path) -> Space:
    doc = read_json(path)
    kind = doc.get("kind", COMPLEX_KIND)
    if kind == PRESENTATION_KIND:
        return presentation_from_json(doc)
    return complex_from_json(doc)


def cmd_build(space: str, out: Optional[Path] = None, as_json: bool = False) -> CommandOutcome:
    """Build a named space, validate it and write its JSON document to out (stdout if None)."""
    try:
        built = build_space(space)
    except KeyError as e:
        return CommandOutcome.failure(ExitCode.USAGE, str(e.args[0]), as_json)
    if isinstance(built, DeltaComplex):
        require_valid(built, "build")
        cells = list(built.cells_per_dim)
    else:
        cells = [len(built.generators), len(built.relators)]

    doc = _space_document(built)
    if out is None:
        return CommandOutcome(ExitCode.OK, to_json_text(doc))
    path = write_json(out, doc)
    summary = {"space": SpaceName(space).value, "kind": doc["kind"], "cells": cells, "path": str(path)}
    text = f"wrote {summary['space']} ({doc['kind']}, counts {tuple(cells)}) to {path}"
    return CommandOutcome.emit(ExitCode.OK, summary, text, as_json)


def invariants_of(complex_: DeltaComplex) -> Dict[str, Any]:
    groups = homology(complex_)
    result: Dict[str, Any] = {
        "cells": list(complex_.cells_per_dim),
        "euler": euler_characteristic(complex_),
        "components": connected_components(complex_),
        "homology": homology_to_json(groups),
        "signature": homology_signature(groups),
    }
    if complex_.dimension == 2:
        boundary = boundary_subcomplex(complex_)
        result["boundary"] = {
            "cells": list(boundary.cells_per_dim),
            "edges": [boundary.name(e) for e in boundary.cells(1)],
            "components": connected_components(boundary),
            "signature": homology_signature(homology(boundary)) if boundary.dimension >= 0 else [],
        }
    return result


def cmd_invariants(path: Path, as_json: bool = False) -> CommandOutcome:
    """Euler characteristic, components, homology and (in dimension 2) the boundary of a stored complex."""
    try:
        doc = read_json(path)
        complex_ = complex_from_json(doc)
        result = invariants_of(complex_)
    except TopologyError as e:
        return CommandOutcome.failure(ExitCode.CHECK_FAILED, str(e), as_json)

    lines = [
        f"cells       {tuple(result['cells'])}",
        f"euler       {result['euler']}",
        f"components  {result['components']}",
        f"homology    [{', '.join(result['signature'])}]",
    ]
    if "boundary" in result:
        b = result["boundary"]
        lines.append(f"boundary    cells {tuple(b['cells'])}, edges {', '.join(b['edges']) or '-'}")
    return CommandOutcome.emit(ExitCode.OK, result, "\n".join(lines), as_json)


def cmd_pi1(path: Path, simplify: bool = False, as_json: bool = False) -> CommandOutcome:
    """
    Presentation of pi_1 from a stored complex, or a stored presentation as is.
    With simplify, adds the Tietze trace, the triviality verdict and any torus-knot match.
    """
    try:
        space = _load_document(path)
        group = pi1_presentation(space) if isinstance(space, DeltaComplex) else space
        result: Dict[str, Any] = {"presentation": presentation_to_json(group), "text": str(group)}
        invariants = abelianization(group)
        result["abelianization"] = {"rank": invariants.rank, "torsion": list(invariants.torsion)}
        lines = [f"pi_1 = {group}", f"abelianization: rank {invariants.rank}, torsion {list(invariants.torsion)}"]
        if simplify:
            certificate = is_trivial_certified(group)
            match = match_torus_relator(certificate.trace.presentation)
            result.update(certificate.to_json())
            result["torus"] = [match.p, match.q] if match else None
            lines.append(f"simplified: {certificate.trace.presentation}")
            for name, word in certificate.trace.substitution_strings().items():
                lines.append(f"  {name} = {word}")
            lines.append(f"verdict: {certificate.verdict.value}")
            if match:
                lines.append(f"torus relator: ({match.p}, {match.q}) in {match.x}, {match.y}")
    except TopologyError as e:
        return CommandOutcome.failure(ExitCode.CHECK_FAILED, str(e), as_json)
    return CommandOutcome.emit(ExitCode.OK, result, "\n".join(lines), as_json)


def cmd_knot(variant: Optional[str] = None, samples: Optional[int] = None, as_json: bool = False) -> CommandOutcome:
    """Sample the curve and check winding, sphere, equation and injectivity; defaults come from config.yaml."""
    try:
        config = KnotCurveConfig(
            variant if variant is not None else settings.knot_variant,
            samples if samples is not None else settings.knot_samples,
        )
    except KnotConfigError as e:
        return CommandOutcome.failure(ExitCode.USAGE, str(e), as_json)
    report = knot_report(config)
    lines = [
        f"variant     {report['variant']} ({report['samples']} samples)",
        f"winding     {tuple(report['winding'])}",
        f"sphere      {report['sphere_residual']:.3e}",
        f"residual    {'n/a' if report['max_residual'] is None else format(report['max_residual'], '.3e')}",
        f"min dist    {report['min_pairwise_distance']:.3e}",
        f"checks      {'ok' if report['ok'] else 'FAILED: ' + ', '.join(k for k, v in report['checks'].items() if not v)}",
    ]
    code = ExitCode.OK if report["ok"] else ExitCode.CHECK_FAILED
    return CommandOutcome.emit(code, report, "\n".join(lines), as_json)


def cmd_report(as_json: bool = False,
               builders: Optional[Mapping[SpaceName, Callable[[], Space]]] = None) -> CommandOutcome:
    claims = run_claims(builders)
    code = ExitCode.OK if all(c.passed for c in claims) else ExitCode.CHECK_FAILED
    payload = [c.to_json() for c in claims]
    return CommandOutcome.emit(code, payload, "\n".join(c.line() for c in claims), as_json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subn", description="Exact topology of the spaces Sub_n(I) and Sub_n(S^1)")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS,
                        help="override logging.level from config.yaml")
    sub = parser.add_subparsers(dest="command", required=True)

    build_p = sub.add_parser("build", help="Build a named space and write its JSON document")
    build_p.add_argument("space", help=f"one of: {', '.join(s.value for s in SpaceName)}")
    build_p.add_argument("--out", type=Path, help="output file (default: stdout)")
    build_p.add_argument("--json", action="store_true", help="machine-readable summary")

    inv_p = sub.add_parser("invariants", help="Homology, Euler characteristic and boundary of a complex")
    inv_p.add_argument("input", type=Path)
    inv_p.add_argument("--json", action="store_true")

    pi1_p = sub.add_parser("pi1", help="Fundamental group presentation of a complex or presentation file")
    pi1_p.add_argument("input", type=Path)
    pi1_p.add_argument("--simplify", action="store_true", help="run Tietze simplification and verdicts")
    pi1_p.add_argument("--json", action="store_true")

    knot_p = sub.add_parser("knot", help="Sample the (2,3) torus knot on the 3-sphere")
    knot_p.add_argument("--variant", default=None, help=f"one of: {', '.join(v.value for v in KnotVariant)}")
    knot_p.add_argument("--samples", type=int, default=None)
    knot_p.add_argument("--json", action="store_true")

    report_p = sub.add_parser("report", help="Check every claim of the argument")
    report_p.add_argument("--json", action="store_true")
    return parser


def dispatch(args: argparse.Namespace) -> CommandOutcome:
    if args.command == "build":
        return cmd_build(args.space, args.out, args.json)
    if args.command == "invariants":
        return cmd_invariants(args.input, args.json)
    if args.command == "pi1":
        return cmd_pi1(args.input, args.simplify, args.json)
    if args.command == "knot":
        return cmd_knot(args.variant, args.samples, args.json)
    return cmd_report(args.json)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    configure_logging(args.log_level)
    outcome = dispatch(args)
    print(outcome.report)
    logger.debug("%s finished with exit code %d", args.command, outcome.exit_code)
    return int(outcome.exit_code)
