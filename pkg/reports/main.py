import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional

# attach directory to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)) + "/..")

from hopf.families import build_family
from hopf.presentation import HopfPresentation
from hopf.rewriting import word_string
from algebras.standardActions import standard_action
from fusion.closure import (
    criterion_details,
    generation_closure,
    hopf_ideal_witness,
    inner_faithful_criterion,
    irreducible_parts,
    module_of,
)
from fusion.expectedRules import expected_fusion
from fusion.fusionTable import build_fusion_table
from invariants.faithfulness import faithfulness_check
from invariants.fixedRing import SCHEMA_ID, minimal_generators
from representations.catalog import irreducible_catalog
from representations.labels import parse_labels
from reports.orchestrator import VerifyOrchestrator, outcome_frame, verify_document
from reports.schema import validate_document
from reports.theoremCases import REGISTRY, expected_invariants, get_case, parse_range
from utils.config import EngineSettings
from utils.errors import CriterionNotApplicable, HopfEngineError
from utils.jsonIO import dumps, loads, write_document

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_MISMATCH, EXIT_BAD_INPUT = 0, 1, 2
GROUPS = ("ZnWrS2", "D4m", "D2mxZ2")


def _hopf(args) -> HopfPresentation:
    if args.family == "group":
        if not args.group:
            raise HopfEngineError(f"--family group needs --group, one of {GROUPS}")
        return build_family(args.group, n=args.n, m=args.m)
    return build_family(args.family, n=args.n, m=args.m)


def _header(H: HopfPresentation, kind: str) -> Dict[str, Any]:
    return {"schema": SCHEMA_ID, "kind": kind, "algebra": H.name, "family": H.family, "hopf_parameters": dict(H.params)}


def _emit(document: Dict[str, Any], kind: str, text: str, args, settings: EngineSettings) -> None:
    """Print text or JSON, and write the JSON document to --out when given."""
    plain = loads(dumps(document))
    validate_document(plain, kind)
    if args.json:
        print(dumps(plain).decode())
    else:
        print(text)
    if args.out:
        write_document(plain, args.out, settings.report_dir)


def cmd_irreps(args, settings: EngineSettings) -> int:
    H = _hopf(args)
    catalog = irreducible_catalog(H)
    rows, lines = [], [f"{H.name} (dim {H.dimension}): {len(catalog)} irreducibles"]
    for label, rep in catalog:
        ok = bool(rep.check_is_module())
        rows.append({
            "label": str(label),
            "dimension": label.dimension,
            "is_module": ok,
            "matrices": {name: rep.matrices[g].to_json() for g, name in enumerate(H.generator_names)},
        })
        lines.append(f"  {str(label):<10} dim {label.dimension}  module check {'ok' if ok else 'FAILED'}")
    document = {**_header(H, "catalog"), "dimension": H.dimension, "irreducibles": rows}
    _emit(document, "catalog", "\n".join(lines), args, settings)
    return EXIT_OK if all(row["is_module"] for row in rows) else EXIT_MISMATCH


def cmd_fusion(args, settings: EngineSettings) -> int:
    H = _hopf(args)
    table = build_fusion_table(H)
    mismatches: List[str] = []
    if args.check_paper:
        for a in table.labels:
            for b in table.labels:
                if table.product(a, b) != expected_fusion(H, a, b):
                    mismatches.append(f"{a} x {b}: computed {table.product_text(a, b)}")
    document = {**_header(H, "fusion"), **table.to_json(), "commutative": table.is_commutative()}
    if args.check_paper:
        document["mismatches"] = mismatches
    text = table.to_frame().to_string()
    if args.check_paper:
        text += f"\n\nclosed-form check: {'all pairs agree' if not mismatches else f'{len(mismatches)} mismatches'}"
        text += "".join(f"\n  {line}" for line in mismatches)
    _emit(document, "fusion", text, args, settings)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_inner_faithful(args, settings: EngineSettings) -> int:
    H = _hopf(args)
    labels = parse_labels(H.family, args.rep)
    if not labels:
        raise HopfEngineError("--rep names no labels")
    table = build_fusion_table(H)
    closure = generation_closure(irreducible_parts(H, labels), table)
    complete = closure == set(table.labels)
    try:
        criterion: Optional[bool] = inner_faithful_criterion(H, labels)
    except CriterionNotApplicable as e:
        logger.info(f"{e}")
        criterion = None
    witness = hopf_ideal_witness(module_of(H, labels))
    witness_text = word_string(witness, H.generator_names) if witness is not None else None
    details = criterion_details(H, labels)
    document = {
        **_header(H, "inner-faithful"),
        "module": [str(label) for label in labels],
        "closure": [str(label) for label in table.labels if label in closure],
        "inner_faithful": complete,
        "criterion": criterion,
        "criterion_values": details,
        "hopf_ideal_witness": witness_text,
    }
    lines = [
        f"{H.name}, V = {' + '.join(str(label) for label in labels)}",
        f"  closure: {len(closure)} of {len(table)} labels",
        f"  criterion values: {', '.join(f'{k} = {v}' for k, v in details.items()) or 'n/a'}",
        f"  criterion verdict: {criterion if criterion is not None else 'not applicable'}",
        f"  inner-faithful: {complete}",
    ]
    if witness_text:
        lines.append(f"  group-like acting trivially: {witness_text}")
    _emit(document, "inner-faithful", "\n".join(lines), args, settings)
    return EXIT_MISMATCH if criterion is not None and criterion != complete else EXIT_OK


def cmd_invariants(args, settings: EngineSettings) -> int:
    H = _hopf(args)
    A = standard_action(H, args.algebra, i=args.i, j=args.j, eps=args.eps)
    D = args.max_degree or settings.degree_bound(H.dimension)
    report = minimal_generators(A, D, progress=args.progress)
    if args.faithful:
        report.faithful = faithfulness_check(A, D).faithful
    status = EXIT_OK
    lines = [
        f"{A.name} over {H.name} through degree {D}",
        f"  degrees: {report.degrees}",
    ]
    lines += [f"    [{g.degree}] {g.text}" for g in report.generators]
    lines += [
        f"  Hilbert prefix: {report.hilbert_prefix}",
        f"  certificate: {report.certificate} ({report.certificate_detail})",
        f"  product of degrees: {report.product_of_degrees} (dim H = {report.dim_H})",
        f"  inner-faithful: {report.inner_faithful}",
    ]
    if report.faithful is not None:
        lines.append(f"  faithful through degree {D}: {report.faithful}")
    if args.check_paper:
        want, certificate = expected_invariants(A)
        agrees = report.certificate == certificate and (want is None or sorted(want) == sorted(report.degrees))
        lines.append(f"  published: {sorted(want) if want else '?'} {certificate}: {'agrees' if agrees else 'MISMATCH'}")
        status = EXIT_OK if agrees else EXIT_MISMATCH
    _emit(report.to_json(), "invariants", "\n".join(lines), args, settings)
    return status


def cmd_verify(args, settings: EngineSettings) -> int:
    if args.list:
        for case in REGISTRY.values():
            values = ",".join(str(v) for v in case.default_range)
            print(f"{case.case_id:<32} {case.parameter}={values:<14} {'(slow) ' if case.slow else ''}{case.summary}")
        return EXIT_OK
    if args.all:
        cases = [c for c in REGISTRY.values() if not (args.quick and c.slow)]
        requests = [{"case_id": c.case_id, "values": list(c.default_range)} for c in cases]
    elif args.theorem:
        case = get_case(args.theorem)
        values = parse_range(args.range, case) if args.range else case.default_range
        requests = [{"case_id": case.case_id, "values": list(values)}]
    else:
        raise HopfEngineError("verify needs --theorem, --all or --list")
    state = VerifyOrchestrator(jobs=args.jobs, progress=args.progress).run(requests)
    if state["status"] != "completed":
        raise HopfEngineError(f"verification did not complete: {state.get('error')}")
    text = outcome_frame(state["outcomes"]).to_string(index=False)
    _emit(verify_document(state), "verify", text, args, settings)
    return EXIT_OK if state["passed"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopf-reflections", description="Exact computations for semisimple Hopf actions on AS regular algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, choices=["h2n2", "a4m", "b4m", "group"])
        p.add_argument("--group", choices=GROUPS, help="group algebra when --family group")
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)

    def output_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="print the JSON document instead of text")
        p.add_argument("--out", help="also write the JSON document to this file")

    p = sub.add_parser("irreps", help="irreducible catalog")
    family_args(p)
    output_args(p)
    p.set_defaults(handler=cmd_irreps)

    p = sub.add_parser("fusion", help="fusion table")
    family_args(p)
    output_args(p)
    p.add_argument("--check-paper", action="store_true", help="compare with the closed-form fusion rules")
    p.set_defaults(handler=cmd_fusion)

    p = sub.add_parser("inner-faithful", help="inner-faithfulness of a module")
    family_args(p)
    output_args(p)
    p.add_argument("--rep", required=True, help="comma separated labels, e.g. pi_1_2 or pi_1-,T+-+")
    p.set_defaults(handler=cmd_inner_faithful)

    p = sub.add_parser("invariants", help="minimal generators of a fixed ring")
    family_args(p)
    output_args(p)
    p.add_argument("--algebra", required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--eps", type=int, default=1, choices=[1, -1])
    p.add_argument("--faithful", action="store_true", help="also search for every irreducible up to the bound")
    p.add_argument("--check-paper", action="store_true", help="compare with the published degrees and certificate")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("verify", help="run theorem case sweeps")
    output_args(p)
    p.add_argument("--theorem")
    p.add_argument("--range", help="e.g. m=2,4,6 or n=2..5")
    p.add_argument("--all", action="store_true")
    p.add_argument("--quick", action="store_true", help="with --all, skip slow cases")
    p.add_argument("--list", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = EngineSettings.from_env()
    except HopfEngineError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    logging.basicConfig(level=settings.log_level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    try:
        return args.handler(args, settings)
    except HopfEngineError as e:
        logger.error(f"Error running {args.command}: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
