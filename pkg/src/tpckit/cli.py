"""Command line interface: ``tpckit <command> ...``.

Reports go to standard output as canonical JSON, diagnostics to standard
error.  Exit codes: 0 ok, 1 usage, 2 parse or validation error, 3 not TPC,
4 provisional, 5 invariant violation.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from . import composition, examples, perturbation, weights
from .errors import (
    AmbiguousTruncation,
    CapacityError,
    GraphError,
    InconsistentWeight,
    InvariantViolation,
    MissingWeight,
    NoConvergence,
    NoExtension,
    NotAWeight,
    SchemaError,
    TheoremViolation,
    TruncationExhausted,
    ValidationError,
)
from .fusion import principal_graphs, validate
from .io import dumps, parse, parse_weight, read_text, system_to_dict

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_FALSE, EXIT_PROVISIONAL, EXIT_INVARIANT = range(6)

log = logging.getLogger("tpckit")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _echo(name: str, **opts) -> dict:
    return {"name": name, "options": {k: v for k, v in opts.items() if v is not None}}


def _emit(doc: dict, out=None) -> None:
    (out or sys.stdout).write(dumps(doc))


def _load(path: str, check: bool = True):
    return parse(read_text(path), check=check)


def verdict_dict(v: Optional[weights.TpcVerdict], provisional: bool = False) -> dict:
    if v is None:
        return {"tpc": None, "provisional": True}
    return {
        "tpc": v.tpc,
        "provisional": provisional,
        "depth_conditional": v.depth_conditional,
        "definitive": v.definitive,
        "dimensions": dict(v.dimensions),
        "witness": None if v.witness is None else dict(v.witness),
        "witness_algebra": v.witness_algebra,
    }


def _decide(system) -> tuple[dict, list, int]:
    """Verdict document, diagnostics and exit code for a system."""
    try:
        v = weights.is_tpc(system)
    except AmbiguousTruncation as e:
        diag = {"skipped": [list(p) for p in e.skipped], "notes": [str(e)]}
        return {"tpc": None, "provisional": True, "dimension": e.dimension}, diag, EXIT_PROVISIONAL
    provisional = not v.tpc and not v.definitive
    diag = {"skipped": [list(p) for p in v.skipped], "notes": list(v.notes)}
    if v.tpc:
        code = EXIT_OK
    else:
        code = EXIT_PROVISIONAL if provisional else EXIT_FALSE
    return verdict_dict(v, provisional), diag, code


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    doc = _load(args.file, check=False)
    violations = validate(doc.system)
    if doc.bicategory is not None:
        violations = composition.validate_bicategory(doc.bicategory)
    _emit({
        "command": _echo("validate"),
        "result": {"valid": not violations, "violations": violations},
    })
    return EXIT_OK if not violations else EXIT_INPUT


def cmd_weights(args) -> int:
    doc = _load(args.file)
    scope = weights.even_only(args.even_only) if args.even_only else weights.FULL
    if args.even_only and args.even_only not in doc.system.algebras:
        raise UsageError(f"unknown algebra {args.even_only!r}")
    space = weights.solve_weight_space(doc.system, scope)
    _emit({
        "command": _echo("weights", even_only=args.even_only),
        "result": {
            "scope": str(scope),
            "dimension": space.dimension,
            "basis": [space.vector(i) for i in range(space.dimension)],
        },
        "diagnostics": {
            "completeness": str(doc.system.completeness),
            "skipped": [list(p) for p in space.skipped],
        },
    })
    return EXIT_OK


def cmd_tpc(args) -> int:
    doc = _load(args.file)
    result, diag, code = _decide(doc.system)
    diag["completeness"] = str(doc.system.completeness)
    _emit({"command": _echo("tpc"), "result": result, "diagnostics": diag})
    return code


def _modulus_dict(m: perturbation.Modulus) -> dict:
    return {"delta_minus": m.delta_minus, "delta_plus": m.delta_plus, "index": m.index}


def _dims_of(doc):
    if doc.dims is None:
        raise SchemaError("$.dims: document carries no dimension data")
    return doc.dims


def cmd_dims(args) -> int:
    doc = _load(args.file)
    if args.graph:
        graphs = principal_graphs(doc.system, args.depth)
        plus = perturbation.pf_dimensions(graphs, "plus")
        minus = perturbation.pf_dimensions(graphs, "minus")
        dims = perturbation.dims_from_graph(graphs)
        result = {
            "graph": {
                "plus": dict(plus.values),
                "minus": dict(minus.values),
                "norm": plus.norm,
                "index": plus.index,
            },
            "dims": {s: {"left": e.left, "right": e.right, "mult": e.mult} for s, e in dims.entries.items()},
            "modulus": _modulus_dict(perturbation.modulus_of(dims)),
        }
    else:
        dims = _dims_of(doc)
        result = {
            "dims": {s: {"left": e.left, "right": e.right, "mult": e.mult} for s, e in dims.entries.items()},
            "modulus": _modulus_dict(perturbation.modulus_of(dims)),
        }
    _emit({"command": _echo("dims", graph=args.graph or None, depth=args.depth if args.graph else None),
           "result": result})
    return EXIT_OK


def _report_dict(rep: perturbation.PerturbationReport) -> dict:
    return {
        "perturbed": {s: {"left": e.left, "right": e.right, "mult": e.mult} for s, e in rep.perturbed.entries.items()},
        "modulus": _modulus_dict(rep.modulus),
        "index": rep.index,
        "spherical": rep.spherical,
        "sphericalizing_weight": None if rep.sphericalizing is None else dict(rep.sphericalizing.values),
        "min_index": rep.min_index,
    }


def _attached(doc, dims):
    return doc.system if all(s in doc.system.by_id for s in dims) else None


def cmd_perturb(args) -> int:
    doc = _load(args.file)
    dims = _dims_of(doc)
    if (args.weight is None) == (args.scalar is None):
        raise UsageError("give exactly one of --weight FILE or --scalar VALUE")
    if args.scalar is not None:
        if not args.scalar > 0:
            raise UsageError("--scalar must be positive")
        w = {s: args.scalar for s in dims}
        echo = _echo("perturb", scalar=args.scalar)
    else:
        w = parse_weight(read_text(args.weight))
        echo = _echo("perturb", weight="file")
    rep = perturbation.perturbation_report(dims, w, _attached(doc, dims))
    _emit({"command": echo, "result": _report_dict(rep)})
    return EXIT_OK


def cmd_spherical(args) -> int:
    doc = _load(args.file)
    dims = _dims_of(doc)
    sph = perturbation.sphericalizing_weight(dims, _attached(doc, dims))
    m = perturbation.modulus_of(dims)
    after = perturbation.modulus_of(perturbation.perturb_dims(dims, sph))
    _emit({
        "command": _echo("spherical"),
        "result": {
            "spherical": perturbation.is_spherical(dims),
            "modulus": _modulus_dict(m),
            "sphericalizing_weight": dict(sph.values),
            "sphericalized_modulus": _modulus_dict(after),
            "min_index": perturbation.min_index(dims),
        },
    })
    return EXIT_OK


def cmd_fuse(args) -> int:
    doc = _load(args.file)
    if doc.bicategory is None:
        raise SchemaError("$.composition: document carries no composition generators")
    bad = composition.validate_bicategory(doc.bicategory)
    if bad:
        raise ValidationError(f"{len(bad)} violation(s): {bad[0]}", bad)
    try:
        report = composition.verify_tpc_closure(doc.bicategory, args.depth)
        code = EXIT_OK if report.status == "PASS" else EXIT_PROVISIONAL
    except TheoremViolation as e:
        report, code = e.report, EXIT_INVARIANT
    comp = composition.compose(doc.bicategory, args.depth)
    _emit({
        "command": _echo("fuse", depth=args.depth),
        "result": {
            "composite": system_to_dict(comp),
            "theorem": {
                "status": report.status,
                "hypothesis": report.hypothesis,
                "conclusion": report.conclusion,
                "verdicts": {k: verdict_dict(v) for k, v in report.verdicts.items()},
            },
        },
        "diagnostics": {"notes": list(report.notes)},
    })
    return code


def cmd_cable(args) -> int:
    doc = _load(args.file)
    if args.k < 1:
        raise UsageError("-k must be a positive integer")
    cabled = composition.cable(doc.system, args.k, args.depth)
    result, diag, code = _decide(cabled)
    _emit({
        "command": _echo("cable", k=args.k, depth=args.depth),
        "result": {"system": system_to_dict(cabled), "verdict": result},
        "diagnostics": diag,
    })
    return code


def cmd_example(args) -> int:
    params = {
        "range": args.range,
        "n": args.n,
        "max_len": args.max_len,
        "h": args.h,
        "k": args.k,
        "n1": args.n1,
        "n2": args.n2,
    }
    params = {k: v for k, v in params.items() if v is not None}
    try:
        made = examples.make_example(examples.ExampleDescriptor(args.kind, params))
    except ValueError as e:
        raise UsageError(str(e)) from None
    if isinstance(made, composition.Bicategory3):
        text = dumps(system_to_dict(made.system, composition=made))
    elif args.kind == "tl-path":
        graphs, system, dims = examples.make_tl_path(int(params.get("n", 3)))
        text = dumps(system_to_dict(system, dims))
    else:
        text = dumps(system_to_dict(made))
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tpckit", description="Weight functions, TPC verdicts and index data for fusion systems.")
    p.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to standard error")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    s = sub.add_parser("validate", help="check a system document")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("weights", help="exact weight-space basis")
    s.add_argument("file")
    s.add_argument("--even-only", metavar="ALGEBRA")
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("tpc", help="trivial perturbation class verdict")
    s.add_argument("file")
    s.set_defaults(func=cmd_tpc)

    s = sub.add_parser("dims", help="dimensions and modulus")
    s.add_argument("file")
    s.add_argument("--graph", action="store_true", help="use Perron-Frobenius dimensions of the principal graphs")
    s.add_argument("--depth", type=int, default=12, help="graph exploration depth (default 12)")
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("perturb", help="perturb dimensions by a weight")
    s.add_argument("file")
    s.add_argument("--weight", metavar="FILE")
    s.add_argument("--scalar", type=float, metavar="LAMBDA")
    s.set_defaults(func=cmd_perturb)

    s = sub.add_parser("spherical", help="sphericality, sphericalizing weight and lowest index")
    s.add_argument("file")
    s.set_defaults(func=cmd_spherical)

    s = sub.add_parser("fuse", help="compose over the middle algebra and check TPC closure")
    s.add_argument("file")
    s.add_argument("--depth", type=int, default=composition.DEFAULT_DEPTH)
    s.set_defaults(func=cmd_fuse)

    s = sub.add_parser("cable", help="cable the generator and decide TPC")
    s.add_argument("file")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--depth", type=int, default=composition.DEFAULT_DEPTH)
    s.set_defaults(func=cmd_cable)

    s = sub.add_parser("example", help="emit an example system document")
    s.add_argument("kind", choices=examples.KINDS)
    s.add_argument("--range", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--max-len", type=int)
    s.add_argument("--h", choices=["e", "12", "123", "S3"])
    s.add_argument("--k", choices=["e", "12", "123", "S3"])
    s.add_argument("--n1", type=int)
    s.add_argument("--n2", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_example)
    return p


INPUT_ERRORS = (
    SchemaError,
    ValidationError,
    CapacityError,
    GraphError,
    NoConvergence,
    NotAWeight,
    MissingWeight,
    NoExtension,
    OSError,
)
INVARIANT_ERRORS = (TheoremViolation, InvariantViolation, InconsistentWeight)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"tpckit: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"tpckit: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"tpckit: invalid system: {e}", file=sys.stderr)
        for v in e.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_INPUT
    except INPUT_ERRORS as e:
        print(f"tpckit: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (AmbiguousTruncation, TruncationExhausted) as e:
        print(f"tpckit: provisional: {e}", file=sys.stderr)
        return EXIT_PROVISIONAL
    except INVARIANT_ERRORS as e:
        print(f"tpckit: invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run())
