"""alexctl: command-line front end.

Exit codes: 0 success, 1 computation error, 2 parse error, 3 verification failure.
"""

import argparse
import hashlib
import json
import shlex
import sys

from .arith.factor import DEFAULT_CYCLOTOMIC_BOUND, factorize
from .arith.field import CyclotomicField
from .arith.grammar import ParseError, parse_poly
from .coinvariants import (
    divisibility_check,
    factorization_chain_report,
    global_alexander_module,
    group_coinvariants,
    local_alexander_module,
    total_space_homology,
)
from .document import DocumentError, load_document
from .laurent import (
    ZLaurentModule,
    alexander_polynomial,
    cover_homology,
    module_from_automorphism,
    power_transform,
    roots_of_unity_audit,
    torsion_order_at_one,
)
from .linalg import IntMatrix, cokernel_Z, smith_normal_form_Z
from .monodromy import FreeWord, evaluate_word, parse_word
from .topo import (
    MILNOR_HYPOTHESIS,
    MilnorData,
    TorsionShape,
    assemble_local_charpoly,
    milnor_bounds,
    suspension_order_bound,
    suspension_sequence_solve,
    torsion_constraint_check,
    variation_complement_homology,
)
from . import verify

EXIT_OK, EXIT_COMPUTE, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


class VerificationFailure(Exception):
    pass


def factored(P, bound=DEFAULT_CYCLOTOMIC_BOUND):
    """Canonical product form such as ``(t - 1)^2*(t + 1)``."""
    if P.degree <= 0:
        return str(P)
    rep = factorize(P, bound)
    parts = []
    for f, k in rep.resolved + rep.unresolved:
        parts.append(f"({f})" + (f"^{k}" if k > 1 else ""))
    lc = P.lc
    prefix = "" if lc == 1 else f"({lc})*"
    return prefix + "*".join(parts)


# ---------------------------------------------------------------------------
# helpers


def _load_rep(args):
    if not args.input:
        raise DocumentError("this command needs --input FILE")
    rep, digest = load_document(args.input)
    args._digest = digest
    return rep


def _int_matrix(text, what="matrix"):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: invalid JSON ({exc.msg})", text, exc.pos) from None
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError(f"{what}: expected a list of rows", text, 0)
    try:
        ncols = len(rows[0]) if rows else 0
        return IntMatrix(rows, ncols)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what}: {exc}", text, 0) from None


def _module_warnings(M, bound, what):
    warnings = []
    for p, k in roots_of_unity_audit(M, bound):
        warnings.append(f"{what}: factor {p} (multiplicity {k}) is not certified cyclotomic")
    if M.invariant_factors:
        rep = factorize(alexander_polynomial(M), bound)
        if not rep.complete:
            warnings.append(f"{what}: factorization of the Alexander polynomial is incomplete")
    return warnings


def _hypotheses(rep):
    return [f"h_good = {str(rep.h_good).lower()} (declared)", f"n = {rep.n}"]


def _pick_value(rep, value):
    if value is None:
        return rep
    return rep.with_distinguished(rep.index_of(value))


# ---------------------------------------------------------------------------
# commands


def cmd_fiber_module(args):
    rep = _load_rep(args)
    if args.infinity:
        w = FreeWord(tuple((i, 1) for i in range(rep.g)))
    elif args.word:
        w = parse_word(args.word, rep.labels)
    elif args.label is not None:
        w = FreeWord.generator(rep.index_of(args.label))
    else:
        raise ValueError("give --label, --word or --infinity")
    for i, _ in w.letters:
        if i >= rep.g:
            raise ValueError(f"generator g{i + 1} out of range (g = {rep.g})")
    M = module_from_automorphism(evaluate_word(rep, w))
    res = {
        "word": str(w),
        "module": M.to_dict(),
        "alexander_polynomial": factored(alexander_polynomial(M), args.cyclotomic_bound),
    }
    return res, _module_warnings(M, args.cyclotomic_bound, "fiber module"), _hypotheses(rep)


def cmd_global(args):
    rep = _load_rep(args)
    Mf = global_alexander_module(rep)
    HG = group_coinvariants(rep)
    res = {"global_module": Mf.to_dict(), "coinvariants": str(HG)}
    return res, [], _hypotheses(rep)


def cmd_local(args):
    rep = _pick_value(_load_rep(args), args.value)
    loc = local_alexander_module(rep)
    chain = factorization_chain_report(rep)
    res = {
        "value": loc.label,
        "local_module": str(loc.module),
        "rational_module": loc.rational_module.to_dict(),
        "chain": chain,
    }
    warnings = _module_warnings(loc.rational_module, args.cyclotomic_bound, "local module")
    return res, warnings, _hypotheses(rep)


def cmd_coinvariants(args):
    rep = _load_rep(args)
    HG = group_coinvariants(rep)
    value = HG.value.to_dict() if rep.integral else {"dimension": HG.value}
    return {"coinvariants": str(HG), "value": value}, [], _hypotheses(rep)


def cmd_homology(args):
    rep = _load_rep(args)
    out = total_space_homology(rep)
    res = {k: (str(v) if not isinstance(v, (int, bool)) else v) for k, v in out.items()}
    warnings = [] if out["euler_ok"] else ["Euler characteristic bookkeeping failed"]
    return res, warnings, _hypotheses(rep)


def cmd_chain(args):
    rep = _pick_value(_load_rep(args), args.value)
    return factorization_chain_report(rep), [], _hypotheses(rep)


def cmd_divisibility(args):
    rep = _pick_value(_load_rep(args), args.value)
    w = parse_word(args.word, rep.labels)
    ok, cert, ell = divisibility_check(rep, w)
    res = {"word": str(w), "winding": ell, "divides": ok, ("quotient" if ok else "remainder"): str(cert)}
    if not ok:
        args._verify_failed = True
    return res, [], _hypotheses(rep)


def cmd_verify_paper(args):
    if args.list:
        return {"cases": [f"{n}: {d}" for n, d in verify.list_cases()]}, [], []
    params = verify.parse_params(args.param)
    results = verify.run_suite(params)
    lines = []
    warnings = []
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}")
        if r.warning:
            warnings.append(f"{r.name}: {r.warning}")
    failed = sum(not r.ok for r in results)
    if failed:
        args._verify_failed = True
    res = {"cases": lines, "passed": len(results) - failed, "failed": failed}
    return res, warnings, ["h_good = true for the two-value family (declared)"]


def cmd_poly_transform(args):
    field = CyclotomicField(args.field_order)
    P = parse_poly(args.poly, field)
    Q = power_transform(P, args.ell)
    return {"input": str(P), "ell": args.ell, "result": str(Q), "factored": factored(Q, args.cyclotomic_bound)}, [], []


def cmd_order_at_one(args):
    P = parse_poly(args.poly, CyclotomicField(1))
    return {"polynomial": str(P), "order": torsion_order_at_one(P)}, [], []


def cmd_constraint_check(args):
    shape = TorsionShape(args.p, tuple(int(x) for x in args.shape.replace(",", " ").split()), args.d)
    verdict, reasons = torsion_constraint_check(shape)
    return {"verdict": verdict, "reasons": reasons}, [], ["conditions are necessary only"]


def cmd_bounds(args):
    lo, hi = milnor_bounds(MilnorData(args.mux, args.mu0x, args.mu))
    return {"lower": lo, "upper": hi}, [], [MILNOR_HYPOTHESIS]


def cmd_cover(args):
    if args.input:
        with open(args.input, "rb") as fh:
            raw = fh.read()
        args._digest = hashlib.sha256(raw).hexdigest()
        doc = json.loads(raw)
        hk = IntMatrix(doc.get("H_k", []))
        hk1 = IntMatrix(doc.get("H_k_minus_1", []))
    else:
        hk = _int_matrix(args.hk or "[]", "--hk")
        hk1 = _int_matrix(args.hk1 or "[]", "--hk1")
    A = ZLaurentModule(hk) if hk.nrows else ZLaurentModule.zero()
    B = ZLaurentModule(hk1) if hk1.nrows else ZLaurentModule.zero()
    G = cover_homology(A, B, args.e)
    return {"e": args.e, "homology": str(G), "group": G.to_dict()}, [], ["extension split (free kernel)"]


def cmd_snf(args):
    A = _int_matrix(args.matrix)
    snf = smith_normal_form_Z(A)
    G = cokernel_Z(A)
    return {"factors": snf.factors, "cokernel": str(G), "group": G.to_dict()}, [], []


def cmd_suspension_bound(args):
    field = CyclotomicField(1)
    factors = [parse_poly(f, field) for f in args.factors]
    return {"d": args.d, "bound": suspension_order_bound(factors, args.d)}, [], ["n > 1"]


def cmd_suspension(args):
    G = suspension_sequence_solve(_int_matrix(args.matrix))
    return {"cokernel": str(G), "group": G.to_dict()}, [], []


def cmd_variation(args):
    V = _int_matrix(args.matrix)
    out = variation_complement_homology(V, args.n, args.bnf, args.components)
    return {f"H_{q}": str(G) for q, G in sorted(out.items())}, [], ["h_good (asserted by caller)"]


def cmd_local_charpoly(args):
    field = CyclotomicField(args.field_order)
    factors = [parse_poly(f, field) for f in args.factors]
    P, k = assemble_local_charpoly(factors, args.bnf)
    return {"k": k, "charpoly": factored(P, args.cyclotomic_bound)}, [], []


# ---------------------------------------------------------------------------
# parser and rendering


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input file (JSON)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cyclotomic-bound", type=int, default=DEFAULT_CYCLOTOMIC_BOUND)

    p = argparse.ArgumentParser(prog="alexctl", description="Alexander modules from monodromy data")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("fiber-module", cmd_fiber_module, "module of one monodromy operator")
    sp.add_argument("--label")
    sp.add_argument("--word", help='e.g. "g1 g2^-1" or labels')
    sp.add_argument("--infinity", action="store_true", help="product of all generators")

    add("global", cmd_global, "global Alexander module M(f)")
    sp = add("local", cmd_local, "local Alexander module M(f, b)")
    sp.add_argument("--value", help="bifurcation value label (default: the distinguished one)")
    add("coinvariants", cmd_coinvariants, "coinvariants of the whole group")
    add("homology", cmd_homology, "homology of the total space")
    sp = add("chain", cmd_chain, "factorization chain report")
    sp.add_argument("--value")
    sp = add("divisibility", cmd_divisibility, "torsion divisibility for a loop")
    sp.add_argument("--word", required=True)
    sp.add_argument("--value")

    sp = add("verify-paper", cmd_verify_paper, "run the built-in reference checks")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--param", action="append", default=[], help="override a, b, c or case, e.g. b=0")

    sp = add("poly-transform", cmd_poly_transform, "l-power transform of a polynomial")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--field-order", type=int, default=1)

    sp = add("order-at-one", cmd_order_at_one, "|Delta(1)|")
    sp.add_argument("--poly", required=True)

    sp = add("constraint-check", cmd_constraint_check, "p-torsion constraints")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--shape", required=True, help="exponents, e.g. 2,2,1")

    sp = add("bounds", cmd_bounds, "Milnor number bounds")
    sp.add_argument("--mux", type=int, required=True)
    sp.add_argument("--mu0x", type=int, required=True)
    sp.add_argument("--mu", type=int, required=True)

    sp = add("cover", cmd_cover, "homology of the e-fold cyclic cover")
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--hk", help="t-action on H_k as a JSON integer matrix")
    sp.add_argument("--hk1", help="t-action on H_(k-1) as a JSON integer matrix")

    sp = add("snf", cmd_snf, "Smith normal form over Z")
    sp.add_argument("--matrix", required=True)

    sp = add("suspension-bound", cmd_suspension_bound, "order bound |Res(t^d - 1, prod Delta_i)|")
    sp.add_argument("--factors", nargs="+", required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = add("suspension", cmd_suspension, "solve the suspension sequence")
    sp.add_argument("--matrix", required=True)

    sp = add("variation", cmd_variation, "complement homology from the variation map")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--bnf", type=int, required=True)
    sp.add_argument("--components", type=int)

    sp = add("local-charpoly", cmd_local_charpoly, "assemble Delta(T_0)")
    sp.add_argument("--factors", nargs="*", default=[])
    sp.add_argument("--bnf", type=int, required=True)
    sp.add_argument("--field-order", type=int, default=1)
    return p


def _text(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _scalar(v):
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "none"
    if isinstance(v, (list, dict)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False, default=str)
    lines = [f"command: {report['command']}"]
    if report.get("input_digest"):
        lines.append(f"input sha256: {report['input_digest']}")
    lines.extend(_text(report["results"]))
    for w in report["warnings"]:
        lines.append(f"WARN {w}")
    for h in report["hypotheses"]:
        lines.append(f"hypothesis: {h}")
    return "\n".join(lines)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args._digest = None
    args._verify_failed = False
    try:
        results, warnings, hypotheses = args.func(args)
    except (ParseError, DocumentError, json.JSONDecodeError) as exc:
        print(f"alexctl: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, ArithmeticError, KeyError, IndexError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"alexctl: error: {msg}", file=sys.stderr)
        return EXIT_COMPUTE
    report = {
        "command": "alexctl " + shlex.join(argv),
        "input_digest": args._digest,
        "results": results,
        "warnings": warnings,
        "hypotheses": hypotheses,
    }
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_VERIFY if args._verify_failed else EXIT_OK


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
