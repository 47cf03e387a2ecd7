"""Command line entry point: ``a1stable emit|apply|analyze|resolve|verify``."""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .catalog import CatalogError, make
from .functors import ext_dim, inverse_loops, localize, loops, minimal_resolution, tensor
from .margolis import RefusalError, UnclassifiableError, margolis_homology, reduced_part
from .module import GradedModule, TrustError, dual
from .picard import InvariantError, classify_local
from .serialize import dumps, loads, module_to_dict, to_ascii, to_dot
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

OPS = {
    "tensor": 2,
    "loops": 1,
    "invloops": 1,
    "localize0": 1,
    "localize1": 1,
    "dual": 1,
    "reduce": 1,
}


class UsageError(Exception):
    pass


def _load_input(spec: str, args) -> GradedModule:
    """A catalog key (optionally ``Sigma^k(KEY)``), a module file, or ``-`` for stdin."""
    if spec == "-":
        return loads(sys.stdin.read())
    if spec.endswith(".json"):
        try:
            with open(spec) as fh:
                return loads(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {spec}: {exc}") from exc
    shift = 0
    m = re.fullmatch(r"\s*Sigma\^?(-?\d+)\((.+)\)\s*", spec)
    if m:
        shift, spec = int(m.group(1)), m.group(2)
    try:
        return make(spec, algebra=args.algebra, lo=args.min_degree, hi=args.max_degree, suspension=shift)
    except CatalogError as exc:
        raise UsageError(str(exc)) from exc


def _provenance(args, **extra) -> dict:
    out = {"tool": "a1stable", "version": __version__, "command": args.command,
           "algebra": args.algebra, "window": [args.min_degree, args.max_degree]}
    out.update(extra)
    return out


def _render(m: GradedModule, fmt: str, provenance: dict) -> str:
    if fmt == "dot":
        return to_dot(m)
    if fmt == "ascii":
        return to_ascii(m)
    return dumps(m, provenance)


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# commands ------------------------------------------------------------------


def cmd_emit(args) -> int:
    m = _load_input(args.key, args)
    report = m.validate()
    if not report.ok:
        print(f"error: {args.key} fails validation: {report}", file=sys.stderr)
        return EXIT_FAIL
    prov = getattr(m, "provenance", None) or _provenance(args, inputs=[args.key])
    _write(_render(m, args.format, prov), args.out)
    return EXIT_OK


def _apply_op(op: str, mods: list[GradedModule], args) -> GradedModule:
    if op == "tensor":
        return tensor(mods[0], mods[1])
    m = mods[0]
    if op == "loops":
        return loops(m)
    if op == "invloops":
        return inverse_loops(m)
    if op == "localize0":
        return localize(m, 0)
    if op == "localize1":
        return localize(m, 1)
    if op == "dual":
        return dual(m)
    return reduced_part(m).reduced


def cmd_apply(args) -> int:
    need = OPS[args.op]
    if len(args.inputs) != need:
        raise UsageError(f"{args.op} takes {need} input(s), got {len(args.inputs)}")
    mods = [_load_input(x, args) for x in args.inputs]
    for spec, m in zip(args.inputs, mods):
        report = m.validate()
        if not report.ok:
            print(f"error: input {spec} fails validation: {report}", file=sys.stderr)
            return EXIT_FAIL
    out = _apply_op(args.op, mods, args)
    prov = _provenance(args, op=args.op, inputs=list(args.inputs),
                       trusted=[out.trusted[0], out.trusted[1]])
    _write(_render(out, args.format, prov), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    m = _load_input(args.input, args)
    result: dict = {"input": args.input, "what": args.what}
    if args.what == "margolis":
        ks = [args.k] if args.k is not None else [0, 1]
        result["homology"] = [margolis_homology(m, k).as_dict() for k in ks]
    elif args.what == "split":
        split = reduced_part(m)
        result["free_generator_degrees"] = split.free_generator_degrees
        result["reduced"] = module_to_dict(split.reduced)
    elif args.what == "classify":
        k = 1 if args.k is None else args.k
        result["class"] = classify_local(m, k).as_dict()
    else:
        if args.other is None:
            raise UsageError("analyze ext needs --other N")
        n = _load_input(args.other, args)
        result.update({"other": args.other, "s": args.s, "t": args.t,
                       "dim": ext_dim(m, n, args.s, args.t)})
    result["provenance"] = _provenance(args, inputs=[args.input])
    _write(_json(result), args.out)
    return EXIT_OK


def cmd_resolve(args) -> int:
    m = _load_input(args.input, args)
    res = minimal_resolution(m, args.stages)
    result = {"input": args.input, "stages": res.stage_records(),
              "trusted_tops": [res.trusted_top(s) if res.trusted_top(s) != float("inf") else None
                               for s in range(res.s_max + 1)],
              "provenance": _provenance(args, inputs=[args.input])}
    _write(_json(result), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed)
    if args.format == "json":
        payload = report.as_dict()
        payload["seed"] = args.seed
        _write(_json(payload), args.out)
    else:
        _write("\n".join(report.lines()) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=["A1", "E1"], default="A1")
    common.add_argument("--min-degree", type=int, default=-2)
    common.add_argument("--max-degree", type=int, default=48)
    common.add_argument("--format", choices=["json", "dot", "ascii"], default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write here instead of stdout")

    p = argparse.ArgumentParser(prog="a1stable", description=__doc__)
    p.add_argument("--version", action="version", version=f"a1stable {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("emit", parents=[common], help="write a catalog module")
    e.add_argument("key", help="catalog key such as P2, J, M1, Fseq:1, Sigma^2(P1), or a module file")
    e.set_defaults(func=cmd_emit)

    a = sub.add_parser("apply", parents=[common], help="apply a functor")
    a.add_argument("op", choices=sorted(OPS))
    a.add_argument("inputs", nargs="+", help="catalog keys, module files, or - for stdin")
    a.set_defaults(func=cmd_apply)

    z = sub.add_parser("analyze", parents=[common], help="homology, splitting, classification, Ext")
    z.add_argument("what", choices=["margolis", "split", "classify", "ext"])
    z.add_argument("input")
    z.add_argument("--k", type=int, choices=[0, 1], default=None)
    z.add_argument("--other", default=None, help="second module for ext")
    z.add_argument("--s", type=int, default=1)
    z.add_argument("--t", type=int, default=0)
    z.set_defaults(func=cmd_analyze)

    r = sub.add_parser("resolve", parents=[common], help="minimal free resolution")
    r.add_argument("input")
    r.add_argument("--stages", type=int, default=4)
    r.set_defaults(func=cmd_resolve)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.command == "verify" and args.format == "dot":
        print("error: verify reports are json or ascii", file=sys.stderr)
        return EXIT_USAGE
    if args.min_degree > args.max_degree:
        print("error: --min-degree exceeds --max-degree", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TrustError, RefusalError, UnclassifiableError, InvariantError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
