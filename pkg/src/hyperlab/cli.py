"""Command-line entry point: check, classify, enumerate, verify, dorroh,
golden-check.

Exit codes: 0 success (or conclusion held), 2 a requested check failed or a
counterexample was found, 1 usage or runtime error.  JSON output goes to
stdout and nothing else does; diagnostics go to stderr.  The worker count
never changes any output except wall_time; --seed is reserved for randomized
property tooling and is ignored by the deterministic sweeps.
"""

import argparse
import json
import sys
from importlib import resources

from . import axioms, dorroh, enumeration, theorems
from .classify import check_hypermodule, classify_single, classify_two_op
from .model import HyperTable, HypermoduleModel, TwoOpModel, members_of
from .modelio import ParseError, parse_model, serialize_model
from .parallel import default_workers

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2


def _common_flags(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--workers", type=int, default=None, metavar="N")
    parser.add_argument("--seed", type=int, default=None, metavar="U64")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlab",
        description="finite-model laboratory for hypercompositional algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate named laws or ring axioms on a model")
    p.add_argument("model", help="model file")
    p.add_argument("--model-format", choices=("auto", "text", "json"), default="auto")
    p.add_argument("--laws", default="", metavar="ID,ID,...")
    p.add_argument("--ring-axioms", default="", metavar="ID,ID,...")
    p.add_argument("--op", choices=("law", "add", "mul", "madd"), default=None)
    _common_flags(p)

    p = sub.add_parser("classify", help="full structure classification of a model")
    p.add_argument("model")
    p.add_argument("--model-format", choices=("auto", "text", "json"), default="auto")
    p.add_argument("--op", choices=("law", "add", "mul", "madd"), default=None)
    p.add_argument("--weak", action="store_true",
                   help="hypermodules: inclusion reading of the scalar-sum axiom")
    _common_flags(p)

    p = sub.add_parser("enumerate", help="stream all models meeting constraints")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--structure", default=None, metavar="ID")
    p.add_argument("--laws", default="", metavar="ID,ID,...")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--zero", type=int, default=None)
    p.add_argument("--one", type=int, default=None)
    p.add_argument("--out", default=None, metavar="FILE")
    p.add_argument("--oracle", action="store_true")
    _common_flags(p)

    p = sub.add_parser("verify", help="run a theorem verifier")
    p.add_argument("--theorem", required=True, metavar="ID")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--drop-premises", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--json", action="store_true", help="alias for --format json")
    _common_flags(p)

    p = sub.add_parser("dorroh", help="integer-extension associativity probe")
    p.add_argument("--base", required=True, metavar="FILE")
    p.add_argument("--range", type=int, required=True, dest="radius", metavar="N")
    p.add_argument("--json", action="store_true", help="alias for --format json")
    _common_flags(p)

    p = sub.add_parser("golden-check", help="re-run the committed count catalog")
    p.add_argument("--catalog", default=None, metavar="FILE")
    _common_flags(p)
    return parser


def _load_model(path, fmt="auto"):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "text"
    return parse_model(text, fmt=fmt)


def _component(model, op):
    if isinstance(model, HyperTable):
        if op in (None, "law"):
            return model
        raise ValueError("--op applies to multi-operation models")
    if isinstance(model, TwoOpModel):
        if op in (None, "add"):
            return model.add
        if op == "mul":
            return model.mul
        raise ValueError(f"model has no operation {op!r}")
    if isinstance(model, HypermoduleModel):
        if op == "add":
            return model.scalars.add
        if op == "mul":
            return model.scalars.mul
        if op in (None, "madd"):
            return model.madd
        raise ValueError(f"model has no operation {op!r}")
    raise TypeError("unsupported model type")


def _set_str(mask):
    return "{" + ",".join(str(i) for i in members_of(mask)) + "}"


def _cmd_check(args, out):
    model = _load_model(args.model, args.model_format)
    laws = [s for s in args.laws.split(",") if s]
    ring = [s for s in getattr(args, "ring_axioms").split(",") if s]
    if not laws and not ring:
        raise ValueError("nothing to check: pass --laws and/or --ring-axioms")
    if ring and not isinstance(model, TwoOpModel):
        raise ValueError("--ring-axioms needs a two-operation model")

    results = []
    table = _component(model, args.op) if laws else None
    for law in laws:
        res = axioms.check_law(table, law)
        results.append(("law", law, res))
    for variant in ring:
        try:
            res = axioms.check_ring_axioms(model, variant)
            results.append(("ring-axiom", variant, res))
        except axioms.PreconditionError as exc:
            results.append(("ring-axiom", variant, exc))

    all_hold = all(
        isinstance(r, axioms.AxiomResult) and r.holds for _, _, r in results
    )
    if args.format == "json":
        payload = {"model": args.model, "results": {}, "all_hold": all_hold}
        for _kind, name, res in results:
            if isinstance(res, axioms.PreconditionError):
                payload["results"][name] = {"holds": False, "precondition": str(res)}
            else:
                payload["results"][name] = res.to_json()
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        for _kind, name, res in results:
            if isinstance(res, axioms.PreconditionError):
                print(f"{name}: precondition failed ({res})", file=out)
            elif res.holds:
                print(f"{name}: holds", file=out)
            else:
                w = res.witness
                print(
                    f"{name}: fails at {tuple(w.elements)} "
                    f"lhs={_set_str(w.lhs)} rhs={_set_str(w.rhs)}",
                    file=out,
                )
    return EXIT_OK if all_hold else EXIT_NEGATIVE


def _cmd_classify(args, out):
    model = _load_model(args.model, args.model_format)
    if args.op is not None:
        report = classify_single(_component(model, args.op))
    elif isinstance(model, HyperTable):
        report = classify_single(model)
    elif isinstance(model, TwoOpModel):
        report = classify_two_op(model)
    else:
        report = check_hypermodule(model, weak=args.weak)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True), file=out)
    else:
        print("labels:", " ".join(sorted(report.labels)) or "(none)", file=out)
        if report.constants:
            parts = [f"{k}={v}" for k, v in sorted(report.constants.items())]
            print("constants:", " ".join(parts), file=out)
    return EXIT_OK


def _cmd_enumerate(args, out, err):
    constraints = []
    if args.structure:
        constraints.append(args.structure)
    constraints.extend(s for s in args.laws.split(",") if s)
    if not constraints and args.order > 2 and not args.oracle:
        print(
            "note: unconstrained enumeration above order 2 is enormous",
            file=err,
        )
    sink = open(args.out, "w", encoding="utf-8") if args.out else out
    emitted = []

    fmt = args.format

    def emit(model):
        if fmt == "json":
            emitted.append(json.loads(serialize_model(model, fmt="json")))
        else:
            print(serialize_model(model), file=sink)

    try:
        job = enumeration.EnumerationJob(
            order=args.order,
            constraints=tuple(constraints),
            up_to_iso=args.up_to_iso,
            zero=args.zero,
            one=args.one,
            oracle=args.oracle,
            emit=emit,
        )
        summary = enumeration.enumerate_models(job, workers=args.workers)
        if fmt == "json":
            print(json.dumps(emitted, sort_keys=True), file=sink)
    finally:
        if args.out:
            sink.close()
    print(json.dumps(summary.to_json(), sort_keys=True), file=err)
    return EXIT_OK


def _cmd_verify(args, out):
    fmt = "json" if args.json else args.format
    report = theorems.verify(
        args.theorem,
        args.order,
        drop_premises=args.drop_premises,
        oracle=args.oracle,
        workers=args.workers,
    )
    if fmt == "json":
        print(json.dumps(report.to_json(), sort_keys=True), file=out)
    else:
        print(
            f"{report.theorem} order {report.order}: "
            f"space {report.space_size}, premise models {report.premise_models}, "
            f"conclusion {'holds' if report.conclusion_holds else 'FAILS'} "
            f"({report.wall_time:.2f}s)",
            file=out,
        )
        if report.counterexample:
            print("counterexample:", json.dumps(report.counterexample), file=out)
        for entry in report.independence_witnesses:
            print("independence:", json.dumps(entry), file=out)
        if report.extras:
            print("extras:", json.dumps(report.extras, sort_keys=True), file=out)
    return EXIT_OK if report.conclusion_holds else EXIT_NEGATIVE


def _cmd_dorroh(args, out):
    fmt = "json" if args.json else args.format
    model = _load_model(args.base)
    if not isinstance(model, TwoOpModel):
        raise ValueError("the probe base must be a two-operation model")
    report = dorroh.associativity_probe(
        model, args.radius, workers=args.workers, base_name=args.base
    )
    if fmt == "json":
        print(json.dumps(report.to_json(), sort_keys=True), file=out)
    else:
        print(
            f"window {report.radius}: {report.triples_checked} triples, "
            f"{report.assoc_equal_count} associate equally, "
            f"{report.weak_assoc_ok_count} weakly, "
            f"inclusion {'ok' if report.inclusion_ok else 'VIOLATED'}, "
            f"window addition {'canonical' if report.canonical_window_ok else 'NOT canonical'}",
            file=out,
        )
        if report.first_assoc_violation:
            print("first violation:", json.dumps(report.first_assoc_violation), file=out)
    ok = report.inclusion_ok and report.canonical_window_ok
    return EXIT_OK if ok else EXIT_NEGATIVE


def default_catalog_path() -> str:
    return str(resources.files("hyperlab") / "data" / "golden_catalog.json")


def _cmd_golden(args, out):
    path = args.catalog or default_catalog_path()
    report = enumeration.golden_check(path, workers=args.workers)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True), file=out)
    else:
        for entry in report["entries"]:
            status = "ok" if entry["ok"] else "MISMATCH"
            print(
                f"{entry['name']}: raw {entry['actual_raw']}/{entry['expected_raw']} "
                f"canonical {entry['actual_canonical']}/{entry['expected_canonical']} "
                f"{status}",
                file=out,
            )
        print("pass" if report["pass"] else "fail", file=out)
    return EXIT_OK if report["pass"] else EXIT_NEGATIVE


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "workers", None) is None:
        args.workers = default_workers()
    try:
        if args.command == "check":
            return _cmd_check(args, out)
        if args.command == "classify":
            return _cmd_classify(args, out)
        if args.command == "enumerate":
            return _cmd_enumerate(args, out, err)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "dorroh":
            return _cmd_dorroh(args, out)
        if args.command == "golden-check":
            return _cmd_golden(args, out)
        raise ValueError(f"unknown command {args.command!r}")
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    except (ValueError, OSError, axioms.PreconditionError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
