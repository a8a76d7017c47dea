"""Command-line interface.

Subcommands read and write versioned JSON documents so they can be piped:

    momentlab catalog semicircle --order 8 | momentlab transform --to free

Exit codes: 0 success, 1 mathematical error (a JSON error object is
printed), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as _catalog
from .errors import MomentLabError
from .exactalg.poly import MultiPoly
from .exactalg.rational import is_scalar
from .identities import HankelMinorSpec, hankel_minor_det, hankel_minor_gv
from .jacobi import (
    JacobiParams,
    jacobi_from_moments,
    moments_from_jacobi,
    orthopoly_determinant,
    orthopoly_recurrence,
)
from .paths import (
    Discipline,
    LatticePath,
    LukasClassical,
    LukasFree,
    MotzkinFlajolet,
    enumerate_paths,
    factorize_irreducible,
    returns_to_zero,
    valuate,
)
from .serialize import SCHEMA_VERSION, DocumentError, dumps, loads, value_from_json, value_to_json
from .transforms import (
    CumulantKind,
    CumulantSeq,
    MomentSeq,
    from_moments,
    symbolic_cumulants,
    symbolic_moments,
    to_moments,
)
from .verify import IDENTITY_CLASSES, verify_suite

KINDS = ["moments", "free", "classical", "boolean"]


class UsageError(Exception):
    pass


# -- documents --------------------------------------------------------------------

def _is_symbolic(values):
    return any(isinstance(v, MultiPoly) and not v.is_constant() for v in values)


def sequence_doc(seq):
    if isinstance(seq, MomentSeq):
        kind, order = "moments", seq.order
    else:
        kind, order = seq.kind.value, seq.order
    return {"v": SCHEMA_VERSION, "kind": kind, "order": order,
            "symbolic": _is_symbolic(seq.values),
            "values": [value_to_json(v) for v in seq.values]}


def jacobi_doc(j):
    return {"v": SCHEMA_VERSION, "kind": "jacobi", "order": len(j.a),
            "symbolic": _is_symbolic(j.a + j.lam),
            "a": [value_to_json(v) for v in j.a],
            "lambda": [value_to_json(v) for v in j.lam]}


def parse_document(doc):
    """Turn a loaded document into MomentSeq / CumulantSeq / JacobiParams."""
    kind = doc.get("kind")
    try:
        if kind == "moments":
            return MomentSeq(tuple(value_from_json(v) for v in doc["values"]))
        if kind in ("free", "classical", "boolean"):
            return CumulantSeq(CumulantKind(kind),
                               tuple(value_from_json(v) for v in doc["values"]))
        if kind == "jacobi":
            return JacobiParams(tuple(value_from_json(v) for v in doc["a"]),
                                tuple(value_from_json(v) for v in doc["lambda"]))
    except (KeyError, ValueError, TypeError) as exc:
        raise DocumentError(f"malformed {kind} document: {exc}") from exc
    raise DocumentError(f"unknown document kind {kind!r}")


def _floatify(obj):
    """Decimal rendering for --float (display only)."""
    if isinstance(obj, dict):
        return {k: (_floatify(v) if k in ("values", "a", "lambda", "value") else v)
                for k, v in obj.items()}
    if isinstance(obj, list):
        return [_floatify(v) for v in obj]
    if isinstance(obj, str):
        try:
            return float(Fraction(obj))
        except ValueError:
            return obj
    return obj


def _read_doc(args):
    path = getattr(args, "input", "-")
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse_document(loads(text))


# -- subcommands ----------------------------------------------------------------

def _cmd_paths(args, out):
    disc = Discipline(args.discipline)
    if args.action == "enumerate":
        if args.n is None:
            raise UsageError("paths enumerate needs --n")
        count = 0
        for p in enumerate_paths(args.n, disc, args.irreducible):
            out.write(f"{p}\n")
            count += 1
        out.write(f"count: {count}\n")
        return 0
    if args.path is None:
        raise UsageError(f"paths {args.action} needs a path such as 0,1,1,0")
    p = LatticePath.parse(args.path)
    if args.action == "factorize":
        for q in factorize_irreducible(p):
            out.write(f"{q}\n")
        out.write(f"returns: {returns_to_zero(p)}\n")
        return 0
    if args.action == "valuate":
        size = max(len(p), 1) + 1
        scheme = {
            "motzkin": lambda: MotzkinFlajolet.symbolic(size),
            "lukas-free": lambda: LukasFree.symbolic(size),
            "lukas-classical": lambda: LukasClassical.symbolic(size),
        }[args.scheme]()
        out.write(f"{valuate(p, scheme)}\n")
        return 0
    raise UsageError(f"unknown paths action {args.action!r}")


def _cmd_transform(args, out):
    if args.symbolic:
        if args.source is None or args.order is None:
            raise UsageError("--symbolic needs --from and --order")
        src = (symbolic_moments(args.order) if args.source == "moments"
               else symbolic_cumulants(args.source, args.order))
    else:
        src = _read_doc(args)
        if isinstance(src, JacobiParams):
            raise UsageError("use `jacobi to-moments` for Jacobi documents")
        kind = "moments" if isinstance(src, MomentSeq) else src.kind.value
        if args.source is not None and args.source != kind:
            raise UsageError(f"--from {args.source} but the input holds {kind}")
        if args.order is not None:
            if args.order > src.order:
                raise UsageError(f"input has order {src.order} < {args.order}")
            src = (src.truncate(args.order) if isinstance(src, MomentSeq)
                   else CumulantSeq(src.kind, src.values[: args.order]))
    moments = src if isinstance(src, MomentSeq) else to_moments(src)
    result = moments if args.target == "moments" else from_moments(moments, args.target)
    _emit(out, sequence_doc(result), args)
    return 0


def _cmd_jacobi(args, out):
    if args.action == "from-moments":
        m = _read_doc(args)
        if not isinstance(m, MomentSeq):
            raise UsageError("jacobi from-moments expects a moments document")
        _emit(out, jacobi_doc(jacobi_from_moments(m)), args)
        return 0
    if args.action == "to-moments":
        j = JacobiParams.symbolic(args.size) if args.symbolic else _read_doc(args)
        if not isinstance(j, JacobiParams):
            raise UsageError("jacobi to-moments expects a jacobi document")
        order = args.order if args.order is not None else 2 * len(j.a) - 1
        _emit(out, sequence_doc(moments_from_jacobi(j, order)), args)
        return 0
    if args.action == "orthopoly":
        n = args.n if args.n is not None else 3
        src = JacobiParams.symbolic(n) if args.symbolic else _read_doc(args)
        if isinstance(src, JacobiParams):
            polys, route = orthopoly_recurrence(src, n), "recurrence"
        elif isinstance(src, MomentSeq):
            polys, route = [orthopoly_determinant(src, k) for k in range(n + 1)], "determinant"
        else:
            raise UsageError("orthopoly expects a jacobi or moments document")
        doc = {"v": SCHEMA_VERSION, "kind": "orthopoly", "n": n, "route": route,
               "polys": [value_to_json(p) for p in polys],
               "text": [str(p) for p in polys]}
        _emit(out, doc, args)
        return 0
    raise UsageError(f"unknown jacobi action {args.action!r}")


def _parse_indices(text):
    try:
        return tuple(int(v) for v in text.split(",")) if text else ()
    except ValueError as exc:
        raise UsageError(f"bad index list {text!r}") from exc


def _cmd_minor(args, out):
    try:
        spec = HankelMinorSpec(_parse_indices(args.rows), _parse_indices(args.cols))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    need = spec.max_moment()
    size = need + 1
    if args.scheme == "motzkin":
        params = JacobiParams.symbolic(need // 2 + 1)
        sym_moments = lambda: moments_from_jacobi(params, need)  # noqa: E731
    elif args.scheme == "lukas-free":
        params = LukasFree.symbolic(size)
        sym_moments = lambda: to_moments(  # noqa: E731
            CumulantSeq(CumulantKind.FREE, params.c[:need]))
    else:
        params = LukasClassical.symbolic(size)
        sym_moments = lambda: to_moments(  # noqa: E731
            CumulantSeq(CumulantKind.CLASSICAL, params.kappa[:need]))
    doc = {"v": SCHEMA_VERSION, "kind": "minor", "rows": list(spec.rows),
           "cols": list(spec.cols), "method": args.method, "scheme": args.scheme}
    if args.method == "det":
        m = sym_moments() if args.moments is None else _read_doc(
            argparse.Namespace(input=args.moments))
        if not isinstance(m, MomentSeq):
            raise UsageError("--moments must hold a moments document")
        doc["value"] = value_to_json(hankel_minor_det(m, spec))
    else:
        res = hankel_minor_gv(params, spec)
        doc["value"] = value_to_json(res.value)
        doc["configurations"] = len(res.configurations)
        if args.terms:
            doc["terms"] = [{"perm": list(cfg.perm), "sign": cfg.sign,
                             "paths": [str(p) for p in cfg.paths],
                             "value": value_to_json(cfg.value)}
                            for cfg in res.configurations]
    _emit(out, doc, args)
    return 0


def _cmd_verify(args, out):
    names = None if args.identity is None else [args.identity]
    report = verify_suite(args.depth, names)
    out.write(dumps(report.to_dict()) + "\n")
    return 0 if report.passed else 1


def _cmd_catalog(args, out):
    if args.name == "list":
        for name in _catalog.CATALOG:
            out.write(f"{name}\n")
        return 0
    try:
        m = _catalog.lookup(args.name, args.order, args.param, args.symbolic)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    except ValueError as exc:
        raise UsageError(f"bad parameter {args.param!r}") from exc
    if args.as_kind == "jacobi":
        _emit(out, jacobi_doc(jacobi_from_moments(m)), args)
    elif args.as_kind == "moments":
        _emit(out, sequence_doc(m), args)
    else:
        _emit(out, sequence_doc(from_moments(m, args.as_kind)), args)
    return 0


def _emit(out, doc, args):
    if getattr(args, "float", False):
        doc = _floatify(doc)
    out.write(dumps(doc) + "\n")


# -- parser -----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def build_parser():
    parser = _Parser(prog="momentlab", description=__doc__.splitlines()[0])
    parser.add_argument("--float", action="store_true",
                        help="render rational values as decimals (display only)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    # --float is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--float", action="store_true", default=argparse.SUPPRESS,
                        help=argparse.SUPPRESS)

    p = sub.add_parser("paths", parents=[common], help="enumerate, factorize or valuate lattice paths")
    p.add_argument("action", choices=["enumerate", "factorize", "valuate"])
    p.add_argument("path", nargs="?", help="level sequence such as 0,1,1,0")
    p.add_argument("--n", type=int)
    p.add_argument("--discipline", choices=[d.value for d in Discipline], default="motzkin")
    p.add_argument("--irreducible", action="store_true")
    p.add_argument("--scheme", choices=["motzkin", "lukas-free", "lukas-classical"],
                   default="motzkin")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("transform", parents=[common], help="convert between moments and cumulants")
    p.add_argument("--from", dest="source", choices=KINDS)
    p.add_argument("--to", dest="target", choices=KINDS, required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--input", default="-")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("jacobi", parents=[common], help="Jacobi parameters and orthogonal polynomials")
    p.add_argument("action", choices=["from-moments", "to-moments", "orthopoly"])
    p.add_argument("--order", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--size", type=int, default=3, help="symbolic parameter count")
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--input", default="-")
    p.set_defaults(func=_cmd_jacobi)

    p = sub.add_parser("minor", parents=[common], help="Hankel minor by determinant or Gessel-Viennot")
    p.add_argument("--rows", required=True)
    p.add_argument("--cols", required=True)
    p.add_argument("--method", choices=["det", "gv"], default="det")
    p.add_argument("--scheme", choices=["motzkin", "lukas-free", "lukas-classical"],
                   default="motzkin")
    p.add_argument("--moments", help="moments document for --method det")
    p.add_argument("--terms", action="store_true", help="list GV configurations")
    p.set_defaults(func=_cmd_minor)

    p = sub.add_parser("verify", parents=[common], help="run the cross-check suite")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--identity", choices=sorted(IDENTITY_CLASSES))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="built-in distributions")
    p.add_argument("name", help="semicircle, gaussian-hermite, point-mass, free-poisson or list")
    p.add_argument("param", nargs="?", help="t for point-mass / free-poisson")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--as", dest="as_kind", choices=KINDS + ["jacobi"], default="moments")
    p.set_defaults(func=_cmd_catalog)
    return parser


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except (UsageError, DocumentError) as exc:
        sys.stderr.write(f"momentlab: error: {exc}\n")
        return 2
    except MomentLabError as exc:
        out.write(dumps({"v": SCHEMA_VERSION, **exc.payload()}) + "\n")
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
