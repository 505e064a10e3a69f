"""Command-line front end.

Exit codes: 0 success, 1 invalid model or input document, 2 iteration cap
exceeded, 3 malformed request or failed precondition.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .crisp import DOMAIN, RANGE, combine_models
from .dynamics import IterationCapExceeded
from .models import ModelError, dump_model, resolve_model, validate_fixture_catalog
from .multi_expert import BIPARTITE, MONOPARTITE
from .neutro import NeutroValue, TriState, format_rational, format_scalar, parse_rational, parse_scalar
from .polynomial import Polynomial, poly_gcd
from . import sutra as S
from .survey import ENGINES, check_engine, enumerate_hidden_patterns, run, seed_space

EXIT_OK, EXIT_INVALID, EXIT_CAP, EXIT_REQUEST = 0, 1, 2, 3


class RequestError(Exception):
    """The invocation itself is malformed."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_REQUEST, f"{self.prog}: error: {message}\n")


# rendering

def _cell(v):
    if isinstance(v, TriState):
        return v.value
    if isinstance(v, NeutroValue):
        return format_scalar(v)
    if isinstance(v, Fraction):
        return format_rational(v) if v.denominator != 1 else int(v)
    return v


def _vec(v):
    if isinstance(v, tuple) and len(v) == 2 and all(isinstance(x, tuple) for x in v):
        return {"domain": [_cell(c) for c in v[0]], "range": [_cell(c) for c in v[1]]}
    return [_cell(c) for c in v]


def _raw(r):
    if isinstance(r, tuple) and len(r) == 2 and all(isinstance(x, tuple) for x in r):
        return {"domain": [_cell(c) for c in r[0]], "range": [_cell(c) for c in r[1]]}
    return [_cell(c) for c in r]


def trace_document(engine, model_ref, pattern):
    doc = {
        "engine": engine,
        "model": model_ref,
        "seed": [_cell(c) for c in pattern.seed],
        "side": pattern.side,
        "states": [_vec(s) for s in pattern.trace],
        "raw": [_raw(r) for r in pattern.raw],
        "classification": pattern.classification,
        "period": pattern.period,
        "iterations": pattern.iterations,
        "cycle_start": pattern.cycle_start,
        "hidden_pattern": [_vec(s) for s in pattern.cycle],
    }
    if "mode" in pattern.meta:
        doc["mode"] = pattern.meta["mode"]
    return doc


def _text(v):
    if isinstance(v, dict):
        return "D(" + " ".join(map(str, v["domain"])) + ") R(" + " ".join(map(str, v["range"])) + ")"
    return "(" + " ".join(map(str, v)) + ")"


def human_trace(doc):
    lines = [f"neutromap {__version__}",
             f"engine {doc['engine']}  model {doc['model']}  seed {_text(doc['seed'])}"
             + (f"  side {doc['side']}" if doc["side"] else "")]
    states, raws = doc["states"], doc["raw"]
    lines.append(f"  start  {_text(states[0])}")
    for k, raw in enumerate(raws, 1):
        if raw == states[k]:
            lines.append(f"  {k:>5}  {_text(states[k])}")
        else:
            lines.append(f"  {k:>5}  {_text(raw)} → {_text(states[k])}")
    lines.append(f"{doc['classification']} period {doc['period']} after {doc['iterations']} steps")
    for s in doc["hidden_pattern"]:
        lines.append(f"  {_text(s)}")
    return "\n".join(lines)


# seeds

def _parse_seed(args, model, engine):
    side = args.side or DOMAIN
    space = seed_space(engine, model, side, args.mode)
    fuzzy = engine in ("fuzzy", "nfuzzy")
    if args.seed is not None:
        if args.on:
            raise RequestError("give either --on or --seed, not both")
        cells = [c for c in args.seed.replace(",", " ").split()]
        if len(cells) != len(space):
            raise RequestError(f"--seed needs {len(space)} values, got {len(cells)}")
        try:
            values = [parse_scalar(c) for c in cells]
        except ValueError as exc:
            raise RequestError(str(exc)) from None
        if fuzzy:
            return values
        if any(v not in (0, 1) for v in values):
            raise RequestError("crisp seeds hold only 0 and 1")
        return [int(v.real) for v in values]
    if not args.on:
        raise RequestError("a seed is required: use --on LABELS or --seed VALUES")
    seed = [0] * len(space)
    for ref in ",".join(args.on).split(","):
        ref = ref.strip()
        if not ref:
            continue
        try:
            seed[space.index(ref)] = 1
        except KeyError as exc:
            raise RequestError(str(exc.args[0])) from None
    return seed


def _load(ref):
    try:
        return resolve_model(ref)
    except FileNotFoundError as exc:
        raise RequestError(str(exc)) from None


def dumps(doc) -> str:
    """Indented JSON with vectors of scalars kept on one line."""
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    return re.sub(r"\[\s+([^\[\]{}]*?)\s+\]",
                  lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)


def _emit(doc, fmt, human):
    if fmt == "json":
        print(dumps(doc))
    else:
        print(human(doc))


# commands

def cmd_run(args):
    model = _load(args.model)
    try:
        check_engine(args.engine, model)
    except ValueError as exc:
        raise RequestError(str(exc)) from None
    seed = _parse_seed(args, model, args.engine)
    try:
        pattern = run(args.engine, model, seed, args.side or DOMAIN, args.mode, args.max_iterations)
    except IterationCapExceeded:
        raise
    except ValueError as exc:
        raise RequestError(str(exc)) from None
    _emit(trace_document(args.engine, args.model, pattern), args.format, human_trace)
    return EXIT_OK


def cmd_combine(args):
    models = [_load(ref) for ref in args.inputs]
    combined = combine_models(models, args.mode)
    text = dump_model(combined)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _human_table(doc):
    lines = [f"neutromap {__version__}", f"engine {doc['engine']}  model {doc['model']}"]
    width = max((len(r["seed"]) for r in doc["rows"]), default=4)
    for r in doc["rows"]:
        side = f"{r['side']:<7}" if r["side"] else ""
        states = "  ".join(_text(s) for s in r["hidden_pattern"])
        lines.append(f"{side}{r['seed']:<{width}}  {r['classification']:<11}  {r['period']:>3}  {states}")
    return "\n".join(lines)


def cmd_enumerate(args):
    model = _load(args.model)
    try:
        rows = enumerate_hidden_patterns(model, args.engine, args.mode, args.max_iterations)
    except IterationCapExceeded:
        raise
    except ModelError:
        raise
    except ValueError as exc:
        raise RequestError(str(exc)) from None
    doc = {
        "engine": args.engine,
        "model": args.model,
        "rows": [
            {"side": side, "seed": label, "classification": p.classification,
             "period": p.period, "hidden_pattern": [_vec(s) for s in p.cycle]}
            for side, label, p in rows
        ],
    }
    _emit(doc, args.format, _human_table)
    return EXIT_OK


def cmd_fixtures(args):
    report = validate_fixture_catalog()
    if args.format == "json":
        print(dumps([{"name": n, "kind": k, "rows": r, "cols": c} for n, k, r, c in report]))
    else:
        for n, k, r, c in report:
            print(f"{n:<24} {k:<19} {r}x{c}")
    return EXIT_OK


# sutra dispatch

def _ints(vals, count, names):
    if len(vals) != count:
        raise RequestError(f"expected {count} argument(s): {' '.join(names)}")
    try:
        return [int(v) for v in vals]
    except ValueError:
        raise RequestError("arguments must be integers") from None


def _rats(vals, count, names):
    if len(vals) != count:
        raise RequestError(f"expected {count} argument(s): {' '.join(names)}")
    try:
        return [parse_rational(v) for v in vals]
    except ValueError:
        raise RequestError("arguments must be rational numbers") from None


def _polys(vals, count, names):
    if len(vals) != count:
        raise RequestError(f"expected {count} argument(s): {' '.join(names)}")
    try:
        return [Polynomial.parse(v) for v in vals]
    except ValueError as exc:
        raise RequestError(str(exc)) from None


def _product_of(factors):
    out = Polynomial.const(1)
    for f in factors:
        out = out * f
    return out


def _sutra(name, a, opts, steps):
    """Returns (result_text, conventional_text)."""
    if name == "ekadhika":
        (d,) = _ints(a, 1, ["DENOMINATOR"])
        r = S.ekadhika_expand(d, opts.method or "multiply", steps)
        return f"{r.digits} (period {r.period})", S.long_division_period(d).digits
    if name == "sesanya":
        (d,) = _ints(a, 1, ["DENOMINATOR"])
        r = S.sesanya_expand(d, steps)
        return f"{r.digits} (period {r.period})", S.long_division_period(d).digits
    if name == "nikhilam":
        if len(a) == 1:
            (x,) = _ints(a, 1, ["X"])
            return str(S.nikhilam_square(x, opts.base, steps)), str(x * x)
        x, y = _ints(a, 2, ["X", "Y"])
        return str(S.nikhilam_multiply(x, y, opts.base, steps)), str(x * y)
    if name == "urdhva":
        x, y = _ints(a, 2, ["X", "Y"])
        return str(S.urdhva_multiply(x, y, steps)), str(x * y)
    if name == "square5":
        (x,) = _ints(a, 1, ["X"])
        return str(S.square_ending_5(x, steps)), str(x * x)
    if name == "ekanyuna":
        x, n = _ints(a, 2, ["X", "NINES"])
        return str(S.ekanyuna_multiply(x, n, steps)), str(x * n)
    if name == "firstlast":
        x, y = _ints(a, 2, ["X", "Y"])
        return str(S.first_by_first_last_by_last(x, y, steps)), str(x * y)
    if name == "paravartya":
        p, d = _polys(a, 2, ["DIVIDEND", "DIVISOR"])
        q, r = S.paravartya_divide(p, d, steps)
        cq, cr = p.divmod(d)
        return f"Q = {q}, R = {format_rational(r)}", f"Q = {cq}, R = {cr}"
    if name == "factorq":
        qa, qb, qc = _rats(a, 3, ["A", "B", "C"])
        r = S.anurupyena_factor(qa, qb, qc, steps)
        target = Polynomial.from_coeffs([qc, qb, qa])
        if r is S.NOT_FACTORABLE:
            return str(r), f"{target} (no rational split)"
        return f"({r[0]})({r[1]})", str(_product_of(r))
    if name == "hcf":
        p, q = _polys(a, 2, ["P1", "P2"])
        return str(S.lopana_hcf(p, q, steps)), str(poly_gcd(p, q))
    if name == "factor3":
        (q,) = _polys(a, 1, ["QUADRATIC"])
        r = S.lopana_factor3(q, steps)
        if r is S.NOT_FACTORABLE:
            return str(r), str(q)
        return f"({r[0]})({r[1]})", str(_product_of(r))
    if name == "sopantya":
        c, d = _rats(a, 2, ["C", "D"])
        root = S.sopantya_solve(c, d, steps)
        return f"x = {format_rational(root)}", "root satisfies the equation by substitution"
    if name == "gunita":
        if opts.middle:
            f, p = _polys(a, 2, ["FACTOR", "PRODUCT"])
            q = S.gunita_fill_middle(f, p, steps)
            return str(q), str(p.divmod(f)[0])
        if len(a) < 2:
            raise RequestError("expected PRODUCT FACTOR [FACTOR ...]")
        polys = _polys(a, len(a), ["PRODUCT", "FACTOR..."])
        ok = S.gunita_check(polys[1:], polys[0], steps)
        return str(ok).lower(), str(_product_of(polys[1:]))
    raise RequestError(f"unknown procedure {name!r}")


SUTRAS = ("ekadhika", "nikhilam", "urdhva", "square5", "ekanyuna", "firstlast", "paravartya",
          "factorq", "hcf", "factor3", "sesanya", "sopantya", "gunita")


def cmd_sutra(args):
    if args.name not in SUTRAS:
        raise RequestError(f"unknown procedure {args.name!r}; choose from {', '.join(SUTRAS)}")
    steps = []
    try:
        result, conventional = _sutra(args.name, args.args, args, steps)
    except S.SutraError as exc:
        raise RequestError(str(exc)) from None
    if args.format == "json":
        doc = {"procedure": args.name, "arguments": args.args, "result": result, "steps": steps}
        if args.verify:
            doc["conventional"] = conventional
        print(dumps(doc))
    else:
        for line in steps:
            print(f"  {line}")
        print(result)
        if args.verify:
            print(f"conventional: {conventional}")
    return EXIT_OK


def build_parser():
    p = _Parser(prog="neutromap", description=__doc__.splitlines()[0] if __doc__ else None)
    p.add_argument("--version", action="version", version=f"neutromap {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("human", "json"), default="human")

    r = sub.add_parser("run", help="run one inference from a seed")
    r.add_argument("--engine", required=True, choices=ENGINES)
    r.add_argument("--model", required=True, help="model file or fixture name")
    r.add_argument("--on", action="append", default=[], help="labels or 1-based indices to switch on")
    r.add_argument("--seed", help="full seed vector, comma or space separated")
    r.add_argument("--side", choices=(DOMAIN, RANGE))
    r.add_argument("--mode", choices=(MONOPARTITE, BIPARTITE))
    r.add_argument("--max-iterations", type=int)
    common(r)
    r.set_defaults(func=cmd_run)

    c = sub.add_parser("combine", help="sum or average expert models")
    c.add_argument("inputs", nargs="+")
    c.add_argument("--mode", choices=("sum", "average"), default="sum")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_combine)

    e = sub.add_parser("enumerate", help="hidden pattern of every single-node seed")
    e.add_argument("--engine", required=True, choices=ENGINES)
    e.add_argument("--model", required=True)
    e.add_argument("--mode", choices=(MONOPARTITE, BIPARTITE))
    e.add_argument("--max-iterations", type=int)
    common(e)
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("fixtures", help="validate and list bundled fixtures")
    common(f)
    f.set_defaults(func=cmd_fixtures)

    s = sub.add_parser("sutra", help="run one arithmetic procedure")
    s.add_argument("name")
    s.add_argument("args", nargs="*")
    s.add_argument("--base", type=int)
    s.add_argument("--method", choices=("multiply", "divide"))
    s.add_argument("--middle", action="store_true", help="gunita: find the quotient of a cubic")
    s.add_argument("--verify", action="store_true", help="also print the conventional answer")
    common(s)
    s.set_defaults(func=cmd_sutra)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        if extra and args.command == "sutra":
            # operands may follow options, and "-x^2+1" looks like a flag to argparse
            if "--" in extra:
                extra.remove("--")
            args.args = list(args.args) + extra
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_REQUEST
    try:
        return args.func(args)
    except RequestError as exc:
        print(f"neutromap: {exc}", file=sys.stderr)
        return EXIT_REQUEST
    except ModelError as exc:
        print(f"neutromap: invalid model: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except IterationCapExceeded as exc:
        print(f"neutromap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
