"""Command-line front end.

Exit status: 0 query true / artifact produced, 1 query false, 2 inconclusive
(the message names the bound that was hit), 64 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import shlex
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from . import formulas, oracle, scott
from .certificate import Certificate
from .engine import Bounds, Engine, Inconclusive
from .order import CutDescriptor, CutError, OrderExpr, check_cut, render
from .syntax import ParseError, parse_expr, parse_finite

SCHEMA = "bfscott/1"

EXIT_TRUE, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _render(x) -> object:
    if isinstance(x, OrderExpr):
        return render(x)
    if isinstance(x, CutDescriptor):
        return [s if isinstance(s, bool) else list(s) for s in x.specs]
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], OrderExpr):
        return {"expr": render(x[0]), "cut": _render(x[1])}
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], tuple):
        # oracle node: (order, pebble positions)
        return {"order": list(x[0]), "pebbles": list(x[1])}
    if isinstance(x, tuple):
        return list(x)
    return x


def _text(x) -> str:
    r = _render(x)
    return r if isinstance(r, str) else json.dumps(r)


def _cut(text: str) -> CutDescriptor:
    try:
        specs = json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"bad cut descriptor {text!r}: {err}") from None
    if not isinstance(specs, list):
        raise UsageError(f"bad cut descriptor {text!r}: expected a JSON list")
    return CutDescriptor(specs)


def _positions(text: str):
    text = text.strip()
    return tuple(int(t) for t in text.split(",")) if text else ()


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--stats", action="store_true", help="print memo statistics")
    common.add_argument("--block-factor", type=int, default=Bounds.block_factor)
    common.add_argument("--horizon-base", type=int, default=Bounds.horizon_base)
    common.add_argument("--max-move", type=int, default=Bounds.max_move)
    common.add_argument("--max-configs", type=int, default=Bounds.max_configs)

    p = _Parser(prog="bfscott", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for verb in ("leq", "equiv"):
        q = sub.add_parser(verb, parents=[common])
        q.add_argument("left")
        q.add_argument("right")
        q.add_argument("-n", type=int, required=True)
        q.add_argument("--left-cut", help="JSON cut descriptor on LEFT")
        q.add_argument("--right-cut", help="JSON cut descriptor on RIGHT")
        if verb == "leq":
            q.add_argument("--cert", action="store_true", help="print a certificate")

    q = sub.add_parser("classes", parents=[common])
    q.add_argument("expr")
    q.add_argument("-n", type=int, required=True)

    for verb in ("rank", "complexity"):
        q = sub.add_parser(verb, parents=[common])
        q.add_argument("expr")
        q.add_argument("--n-max", type=int, default=3)
        q.add_argument("--tuple-len", type=int, default=2)
        q.add_argument("--param-len", type=int, default=3)

    q = sub.add_parser("cover2", parents=[common])
    q.add_argument("expr")

    q = sub.add_parser("emit", parents=[common])
    q.add_argument("kind", choices=["finite", "shuffle"])
    q.add_argument("arg", help='a finite order "[0,1]" or a color list "0,1"')

    q = sub.add_parser("oracle", parents=[common])
    q.add_argument("relation", choices=["leq", "equiv"])
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--left-tuple", default="", help="pebbled positions, e.g. 0,2")
    q.add_argument("--right-tuple", default="")
    q.add_argument("--cert", action="store_true")

    q = sub.add_parser("enumerate", parents=[common])
    q.add_argument("--max-size", type=int, default=3)
    q.add_argument("--max-colors", type=int, default=2)

    q = sub.add_parser("batch", parents=[common])
    q.add_argument("file", help="one query per line, '-' for stdin")
    q.add_argument("--jobs", type=int, default=1)
    return p


class _Result:
    def __init__(self, status: int, payload: dict, text: str):
        self.status, self.payload, self.text = status, payload, text


def _verdict(b: bool) -> int:
    return EXIT_TRUE if b else EXIT_FALSE


def _dispatch(a, engine: Engine) -> _Result:
    verb = a.verb
    if verb in ("leq", "equiv"):
        L, K = parse_expr(a.left), parse_expr(a.right)
        if (a.left_cut is None) != (a.right_cut is None):
            raise UsageError("give both --left-cut and --right-cut or neither")
        if a.left_cut is not None:
            lc, rc = _cut(a.left_cut), _cut(a.right_cut)
            check_cut(L, lc)
            check_cut(K, rc)
            fn = engine.equiv_tuples if verb == "equiv" else engine.leq_tuples
            holds = fn(L, lc, K, rc, a.n)
        else:
            lc = rc = None
            holds = (engine.equiv if verb == "equiv" else engine.leq)(L, K, a.n)
        sym = "==" if verb == "equiv" else "<="
        payload = {"holds": holds, "n": a.n, "left": render(L), "right": render(K)}
        text = f"{render(L) or '(empty)'} {sym}_{a.n} {render(K) or '(empty)'}: {'true' if holds else 'false'}"
        if verb == "leq" and a.cert:
            cert = engine.certificate(L, K, a.n, lc, rc)
            payload["certificate"] = cert.to_dict(_render)
            payload["replayed"] = engine.replay(cert)
            text += "\n" + cert.pretty(_text)
        return _Result(_verdict(holds), payload, text)

    if verb == "classes":
        e = parse_expr(a.expr)
        classes = engine.element_classes(e, a.n)
        payload = {"n": a.n, "expr": render(e), "classes": [[list(x) for x in c] for c in classes]}
        text = "\n".join(" ".join(f"{j}:{s}" for j, s in c) for c in classes)
        return _Result(EXIT_TRUE, payload, text)

    if verb in ("rank", "complexity"):
        e = parse_expr(a.expr)
        if verb == "complexity":
            res = scott.scott_complexity(e, a.n_max, a.tuple_len, engine, a.param_len)
            if isinstance(res, scott.ComplexityTag):
                payload = {"complexity": {"shape": res.shape, "level": res.level}, "text": str(res)}
                return _Result(EXIT_TRUE, payload, str(res))
            report = res
        else:
            report = scott.rank_report(e, a.n_max, a.tuple_len, engine, a.param_len)
        payload = {"report": report.to_dict()}
        text = _report_text(report)
        if not report.pinned:
            payload["inconclusive"] = _bound_note(report)
            return _Result(EXIT_INCONCLUSIVE, payload, text + "\n" + _bound_note(report))
        return _Result(EXIT_TRUE, payload, text)

    if verb == "cover2":
        e = parse_expr(a.expr)
        m = scott.cover2(e)
        return _Result(EXIT_TRUE, {"expr": render(e), "cover": render(m)}, render(m))

    if verb == "emit":
        if a.kind == "finite":
            fs = [scott.emit_scott_sentence_finite(parse_finite(a.arg))]
        else:
            colors = sorted(set(_positions(a.arg.strip("{}[]"))))
            if not colors:
                raise UsageError("emit shuffle needs at least one color")
            fs = scott.emit_shuffle_axioms(colors)
        texts = [formulas.to_text(f) for f in fs]
        return _Result(EXIT_TRUE, {"formulas": texts}, "\n".join(texts))

    if verb == "oracle":
        pair = oracle.PebbledPair(parse_finite(a.left), parse_finite(a.right),
                                  _positions(a.left_tuple), _positions(a.right_tuple))
        fn = oracle.bf_equiv if a.relation == "equiv" else oracle.bf_leq
        holds = fn(pair, a.n)
        payload = {"holds": holds, "n": a.n}
        text = "true" if holds else "false"
        if a.cert:
            cert = oracle.bf_extract_certificate(pair, a.n)
            payload["certificate"] = cert.to_dict(_render)
            text += "\n" + cert.pretty(_text)
        return _Result(_verdict(holds), payload, text)

    if verb == "enumerate":
        orders = [list(o) for o in oracle.enumerate_orders(a.max_size, a.max_colors)]
        return _Result(EXIT_TRUE, {"orders": orders}, "\n".join(json.dumps(o) for o in orders))

    raise UsageError(f"unknown verb {verb!r}")  # pragma: no cover


def _report_text(r: scott.RankReport) -> str:
    fmt = lambda lo, up: f"{lo}" if lo == up else f"[{lo}, {'?' if up is None else up}]"
    lines = [f"SR   {fmt(r.sr_lower, r.sr_upper)}", f"SR_p {fmt(r.srp_lower, r.srp_upper)}"]
    if r.witness is not None:
        a, b = r.witness
        lines.append(f"witness {_text(a)} <=_{r.witness_rank} {_text(b)}, different orbits")
    if r.parameter is not None:
        lines.append(f"parameter {_text(r.parameter)}")
    return "\n".join(lines)


def _bound_note(r: scott.RankReport) -> str:
    return (f"inconclusive: ranks not pinned within bounds "
            f"(n_max={r.n_max}, tuple_len_max={r.tuple_len_max}, param_len_max={r.param_len_max})")


def _run_one(argv: List[str], engine: Optional[Engine] = None) -> _Result:
    try:
        a = _build_parser().parse_args(argv)
        if a.verb == "batch":
            raise UsageError("batch files cannot nest")
        engine = engine or Engine(_bounds(a))
        return _dispatch(a, engine)
    except Inconclusive as err:
        return _Result(EXIT_INCONCLUSIVE, {"inconclusive": str(err)}, str(err))
    except (UsageError, ParseError, CutError, ValueError) as err:
        return _Result(EXIT_USAGE, {"error": str(err)}, f"error: {err}")


def _bounds(a) -> Bounds:
    return Bounds(a.block_factor, a.horizon_base, a.max_move, a.max_configs)


def _batch(a, out) -> int:
    f = sys.stdin if a.file == "-" else open(a.file)
    with f:
        lines = [ln.strip() for ln in f]
    queries = [ln for ln in lines if ln and not ln.startswith("#")]
    engine = Engine(_bounds(a))

    def one(line):
        try:
            argv = shlex.split(line)
        except ValueError as err:
            return _Result(EXIT_USAGE, {"error": str(err)}, f"error: {err}")
        if argv and argv[0] == "bfscott":
            argv = argv[1:]
        return _run_one(argv, engine)

    with ThreadPoolExecutor(max_workers=max(1, a.jobs)) as pool:
        results = list(pool.map(one, queries))
    if a.json:
        doc = {"schema": SCHEMA, "verb": "batch",
               "results": [{"query": q, "status": r.status, **r.payload}
                           for q, r in zip(queries, results)]}
        if a.stats:
            doc["stats"] = engine.stats_dict()
        print(json.dumps(doc, indent=2), file=out)
    else:
        for q, r in zip(queries, results):
            print(f"[{r.status}] {q}", file=out)
            for ln in r.text.splitlines():
                print(f"    {ln}", file=out)
        if a.stats:
            print(json.dumps(engine.stats_dict()), file=out)
    return EXIT_USAGE if any(r.status == EXIT_USAGE for r in results) else EXIT_TRUE


def run(argv: List[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        a = _build_parser().parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_TRUE if not e.code else EXIT_USAGE
    if a.verb == "batch":
        try:
            return _batch(a, out)
        except OSError as e:
            print(f"error: {e}", file=err)
            return EXIT_USAGE
    engine = Engine(_bounds(a))
    res = _run_one(argv, engine)
    if a.json:
        doc = {"schema": SCHEMA, "verb": a.verb, "status": res.status, **res.payload}
        if a.stats:
            doc["stats"] = engine.stats_dict()
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(res.text, file=err if res.status == EXIT_USAGE else out)
        if a.stats:
            print("stats " + json.dumps(engine.stats_dict()), file=err)
    return res.status


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
