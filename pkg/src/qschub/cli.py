"""Command-line entry point: ``qschub <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import grobner, quadratic
from .polyring import PolynomialError, parse_polynomial
from .quantization import qschubert_table, quantize, quantum_multiply
from .schubert import schubert_table
from .symgroup import Permutation, all_permutations, parse_permutation
from .verify import run_verification


class UsageError(Exception):
    pass


def _perm(text: str, n: int) -> Permutation:
    try:
        return parse_permutation(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _poly(text: str, n: int):
    try:
        return parse_polynomial(text, n)
    except PolynomialError as exc:
        raise UsageError(str(exc)) from None


def _degree(text: str, n: int) -> tuple[int, ...]:
    try:
        d = tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise UsageError(f"bad degree {text!r}") from None
    if n == 1 and not d:
        return ()
    if len(d) != n - 1 or min(d) < 0:
        raise UsageError(f"degree {text!r} needs {n - 1} nonnegative entries")
    return d


def _perm_listing(table, perm_text, n, fmt, out):
    perms = [_perm(perm_text, n)] if perm_text is not None else sorted(all_permutations(n), key=lambda w: (w.length, w.images))
    if fmt == "json":
        records = [{"n": n, "perm": list(w.images), "poly": str(table[w])} for w in perms]
        print(json.dumps(records[0] if perm_text is not None else records), file=out)
    elif fmt == "tsv" or perm_text is None:
        for w in perms:
            print(f"{w}\t{table[w]}", file=out)
    else:
        print(table[perms[0]], file=out)


def cmd_schubert(args, out):
    _perm_listing(schubert_table(args.n), args.perm, args.n, args.format, out)


def cmd_qschubert(args, out):
    _perm_listing(qschubert_table(args.n), args.perm, args.n, args.format, out)


def cmd_quantize(args, out):
    print(quantize(_poly(args.poly, args.n)), file=out)


def cmd_qmul(args, out):
    print(quantum_multiply(_poly(args.f, args.n), _poly(args.g, args.n)), file=out)


def cmd_nf(args, out):
    f = _poly(args.poly, args.n)
    if args.expand:
        for w, c in grobner.expand_qschubert(f).items():
            print(f"{w}\t{c}", file=out)
    else:
        print(grobner.normal_form(f), file=out)


def cmd_gw(args, out):
    n = args.n
    u, v, w = _perm(args.u, n), _perm(args.v, n), _perm(args.w, n)
    d = _degree(args.d, n)
    values = {}
    if args.method in ("groebner", "both"):
        values["groebner"] = grobner.gw_invariant((u, v, w), d, n)
    if args.method in ("bruhat", "both"):
        values["bruhat"] = quadratic.gw_via_bruhat(u, v, w, d, n)
    if len(set(values.values())) > 1:
        print(f"methods disagree: {values}", file=sys.stderr)
        return 1
    value = next(iter(values.values()))
    if args.format == "json":
        rec = grobner.GWResult(n, u, v, w, d, value, args.method).to_json()
        print(json.dumps(rec), file=out)
    else:
        print(value, file=out)
    return 0


def cmd_gw_table(args, out):
    n = args.n
    max_d = _degree(args.max_d, n)
    rows = grobner.gw_table(n, max_d, method=args.method, workers=args.workers)
    if not grobner.table_is_symmetric(rows):
        print("table is not symmetric in (u, v, w)", file=sys.stderr)
        return 1
    if args.nonzero:
        rows = [r for r in rows if r.value]
    if args.format == "json":
        print("[", file=out)
        for k, r in enumerate(rows):
            print("  " + json.dumps(r.to_json()) + ("," if k + 1 < len(rows) else ""), file=out)
        print("]", file=out)
    else:
        sep = "\t" if args.format == "tsv" else "  "
        if args.format == "tsv":
            print(sep.join(["u", "v", "w", "d", "value"]), file=out)
        for r in rows:
            print(sep.join([str(r.u), str(r.v), str(r.w), ",".join(map(str, r.d)), str(r.value)]), file=out)
    return 0


def cmd_dunkl(args, out):
    n = args.n
    f = _poly(args.poly, n)
    a = quadratic.GroupAlgebraElement.basis(_perm(args.on, n))
    print(quadratic.eval_at_dunkl(f, a, quantum=not args.classical), file=out)


def cmd_en_dim(args, out):
    try:
        comp = quadratic.en_component_basis(args.n, args.deg)
    except quadratic.ResourceBoundExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps({"n": args.n, "deg": args.deg, "dimension": comp.dimension,
                          "basis": [quadratic.format_word(w) for w in comp.words]}), file=out)
    else:
        print(comp.dimension, file=out)
    return 0


def cmd_nonneg(args, out):
    w = _perm(args.perm, args.n)
    try:
        cert = quadratic.nonneg_decompose(w, args.n, bound=args.bound)
    except quadratic.ResourceBoundExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if cert is None:
        print("none found within bound", file=out)
        return 0
    expr = quadratic.NoncommutativeElement(cert)
    if args.format == "json":
        print(json.dumps({"perm": list(w.images),
                          "certificate": [[quadratic.format_word(m), c] for m, c in cert.items()]}), file=out)
    else:
        print(quadratic.format_words(expr), file=out)
    return 0


def cmd_verify(args, out):
    results = run_verification(args.n, seed=args.seed)
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        line = f"{status}  {r.name}"
        if not r.ok:
            failed += 1
            line += f"  -- counterexample: {r.detail}"
        print(line, file=out)
    print(f"{len(results) - failed}/{len(results)} checks passed for n={args.n}", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qschub", description="Quantum Schubert calculus of flag manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, fmt=("plain", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=list(fmt), default="plain")
        p.set_defaults(func=fn)
        return p

    p = add("schubert", cmd_schubert, "classical Schubert polynomial", ("plain", "json", "tsv"))
    p.add_argument("--perm", help="permutation; omit to list all of S_n")
    p = add("qschubert", cmd_qschubert, "quantum Schubert polynomial", ("plain", "json", "tsv"))
    p.add_argument("--perm", help="permutation; omit to list all of S_n")
    p = add("quantize", cmd_quantize, "quantization of a polynomial")
    p.add_argument("--poly", required=True)
    p = add("qmul", cmd_qmul, "quantum product of two polynomials")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p = add("nf", cmd_nf, "normal form modulo the quantized ideal")
    p.add_argument("--poly", required=True)
    p.add_argument("--expand", action="store_true", help="print the expansion in quantum Schubert polynomials")
    p = add("gw", cmd_gw, "one Gromov-Witten invariant")
    for flag in ("--u", "--v", "--w"):
        p.add_argument(flag, required=True)
    p.add_argument("--d", required=True, help='degree, e.g. "1,0"')
    p.add_argument("--method", choices=["groebner", "bruhat", "both"], default="groebner")
    p = add("gw-table", cmd_gw_table, "all invariants up to a degree bound", ("plain", "json", "tsv"))
    p.add_argument("--max-d", required=True, help='componentwise bound, e.g. "2,2"')
    p.add_argument("--method", choices=["groebner", "bruhat"], default="groebner")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--nonzero", action="store_true", help="only print nonzero invariants")
    p = add("dunkl", cmd_dunkl, "evaluate a polynomial at Dunkl elements on a permutation")
    p.add_argument("--poly", required=True)
    p.add_argument("--on", required=True)
    p.add_argument("--classical", action="store_true")
    p = add("en-dim", cmd_en_dim, "dimension of a graded piece of E_n")
    p.add_argument("--deg", type=int, required=True)
    p = add("nonneg", cmd_nonneg, "nonnegative word expansion of S_w(theta)")
    p.add_argument("--perm", required=True)
    p.add_argument("--bound", type=int, default=3)
    p = add("verify", cmd_verify, "run the invariant suite for one n")
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.print_usage(sys.stderr)
        print("qschub: error: --n must be positive", file=sys.stderr)
        return 2
    try:
        status = args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qschub: error: {exc}", file=sys.stderr)
        return 2
    return status or 0


def main() -> None:
    sys.exit(run())
