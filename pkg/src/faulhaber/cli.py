"""Command-line interface.

Every command writes one JSON document to stdout. Numbers are strings
(``"p/q"`` or ``"p"``) so nothing is lost in transport. ``--pretty``
renders a human-readable table instead.

Exit codes: 0 success, 1 usage error, 2 domain error or failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import asymptotic, centralfact, checks, faulcoeff, powersum, reflect, riddle
from .exactnum import format_rational, parse_rational
from .polyring import Poly, binomial_poly, substitute_faulhaber

__all__ = ["main", "build_parser", "document_to_poly", "run"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(x) -> str:
    return format_rational(Fraction(x))


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _poly_doc(p: Poly) -> dict:
    """Descending terms, a common denominator and the matching numerators."""
    den = p.denominator()
    terms = [(k, c) for k, c in enumerate(p.coeffs) if c][::-1]
    return {
        "variable": p.var,
        "denominator": str(den),
        "powers": [k for k, _ in terms],
        "numerators": [str(int(c * den)) for _, c in terms],
        "coefficients": [_fmt(c) for _, c in terms],
    }


def _poly_from_doc(doc: dict) -> Poly:
    out = Poly((), doc["variable"])
    for k, c in zip(doc["powers"], doc["coefficients"]):
        out = out + Poly.monomial(k, parse_rational(c), doc["variable"])
    return out


# ---------------------------------------------------------------------------
# powersum


def cmd_powersum(args) -> dict:
    m, r, basis = args.m, args.r, args.basis
    if m < 1 or r < 0:
        raise DomainError("need m >= 1 and r >= 0")
    doc = {"command": "powersum", "m": m, "r": r, "basis": basis}
    if basis == "n":
        doc.update(_poly_doc(powersum.power_sum(m, r)))
        return doc
    if basis == "faulhaber":
        if r < 1:
            raise DomainError("the Faulhaber form needs r >= 1")
        form = powersum.to_faulhaber_form(m, r)
        if r == 1 and m % 2:
            doc.update(_poly_doc(form.pure_N()))
            doc["factor"] = "1"
        else:
            doc.update(_poly_doc(form.g))
            doc["factor"] = f"sum^{r} n^{form.factor_power}"
        return doc
    if basis == "cfactorial":
        if m % 2:
            k = (m + 1) // 2
            # repeated summation only shifts the binomials
            coeffs = centralfact.odd_powersum_cf(k)
            doc["terms"] = "C(n+k-1+r, 2k-1+r)"
        else:
            if r != 1:
                raise DomainError("even powers in the T_k basis are available for r = 1 only")
            coeffs = centralfact.even_powersum_cf(m // 2)
            doc["terms"] = "T_k(n)"
        doc["k"] = list(range(1, len(coeffs) + 1))
        doc["coefficients"] = [_fmt(c) for c in coeffs]
        return doc
    if basis == "stirling":
        if r != 1:
            raise DomainError("the Stirling forms are available for r = 1 only")
        first, second = centralfact.stirling_expansion(m)
        doc["k"] = list(range(1, m + 1))
        doc["first"] = {"terms": "C(n+1, k+1)", "coefficients": [str(c) for c in first]}
        doc["second"] = {"terms": "C(n+k, k+1)", "coefficients": [str(c) for c in second]}
        return doc
    raise UsageError(f"unknown basis {basis!r}")


def document_to_poly(doc: dict) -> Poly:
    """Re-expand a ``powersum`` document into a polynomial in ``n``."""
    basis = doc["basis"]
    r = doc["r"]
    if basis == "n":
        return _poly_from_doc(doc)
    if basis == "faulhaber":
        g = substitute_faulhaber(_poly_from_doc(doc), r)
        if doc["factor"] == "1":
            return g
        return g * powersum.power_sum(int(doc["factor"].rsplit("^", 1)[1]), r)
    if basis == "cfactorial":
        out = Poly(())
        for k, c in zip(doc["k"], doc["coefficients"]):
            c = parse_rational(c)
            if doc["terms"] == "T_k(n)":
                out = out + centralfact.basis_T(k).scale(c)
            else:
                out = out + binomial_poly(k - 1 + r, 2 * k - 1 + r).scale(c)
        return out
    if basis == "stirling":
        out = Poly(())
        for k, c in zip(doc["k"], doc["first"]["coefficients"]):
            out = out + binomial_poly(1, k + 1).scale(int(c))
        return out
    raise ValueError(f"unknown basis {basis!r}")


# ---------------------------------------------------------------------------
# coeffs

METHODS = ("recurrence", "jacobi", "explicit", "determinant", "symbolic")


def _coeff_values(method: str, w: Fraction, kmax: int) -> list:
    """``A_0..A_kmax`` by one method; ``None`` where the method is undefined."""
    if method == "recurrence":
        return list(faulcoeff.a_by_recurrence(w, kmax))
    if method == "jacobi":
        return list(faulcoeff.a_by_jacobi(w, kmax))
    if method == "symbolic":
        return [faulcoeff.a_symbolic(k)(w) for k in range(kmax + 1)]
    out = []
    for k in range(kmax + 1):
        try:
            if method == "explicit":
                # Gessel-Viennot sum where it applies, the Bernoulli-number
                # polynomial in w everywhere else
                if w.denominator == 1 and 0 <= k < w:
                    out.append(faulcoeff.a_explicit(int(w), k))
                else:
                    out.append(asymptotic.a_general(w, k))
            else:
                out.append(faulcoeff.a_by_determinant(w, k))
        except (ValueError, faulcoeff.PivotError):
            out.append(None)
    return out


def cmd_coeffs(args) -> dict:
    w, kmax = args.w, args.k
    if kmax < 0:
        raise DomainError("k must be nonnegative")
    doc = {"command": "coeffs", "w": _fmt(w), "k": kmax, "method": args.method}
    values = _coeff_values(args.method, w, kmax)
    if all(v is None for v in values[1:]) and kmax > 0:
        raise DomainError(f"method {args.method} is undefined at w = {_fmt(w)}")
    doc["entries"] = [None if v is None else _fmt(v) for v in values]
    if args.cross_check:
        table = {m: _coeff_values(m, w, kmax) for m in METHODS}
        rows = []
        agree = True
        for k in range(kmax + 1):
            got = {m: _fmt(v[k]) for m, v in table.items() if v[k] is not None}
            ok = len(set(got.values())) <= 1
            agree &= ok
            rows.append({"k": k, "values": got, "agree": ok})
        doc["cross_check"] = rows
        doc["agree"] = agree
    return doc


# ---------------------------------------------------------------------------
# decompose


def _load_table(path: str) -> reflect.TabulatedFunction:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}")
    try:
        if isinstance(data, dict) and "values" in data:
            return reflect.TabulatedFunction(int(data["lo"]),
                                             tuple(parse_rational(str(v)) for v in data["values"]))
        if isinstance(data, dict):
            return reflect.TabulatedFunction.from_mapping(
                {int(x): parse_rational(str(v)) for x, v in data.items()})
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        raise DomainError(f"bad table in {path}: {exc}")
    raise DomainError(f"{path}: expected an object {{x: value}} or {{lo, values}}")


def cmd_decompose(args) -> dict:
    f = _load_table(args.values)
    try:
        d = reflect.decompose(f, args.r, args.s)
    except reflect.WindowError as exc:
        raise DomainError(str(exc))
    doc = {"command": "decompose", "r": args.r, "s": args.s, "unique": d.unique}
    for name, part in (("g", d.g), ("h", d.h)):
        doc[name] = {str(x): _fmt(v) for x, v in part.items()}
    return doc


# ---------------------------------------------------------------------------
# asymptotic


def cmd_asymptotic(args) -> dict:
    try:
        s = asymptotic.build_series(args.alpha, args.terms)
    except asymptotic.DegenerateAlphaError as exc:
        raise DomainError(str(exc))
    doc = {
        "command": "asymptotic",
        "alpha": _fmt(s.alpha),
        "w": _fmt(s.w),
        "variable": "u",
        "constant": s.constant_tag,
        "exact": s.exact,
        "exponents": [_fmt(e) for e, _ in s.terms],
        "coefficients": [_fmt(c) for _, c in s.terms],
    }
    if args.check:
        n1, n2 = args.check
        try:
            rep = asymptotic.telescope_check(s.alpha, args.terms, n1, n2, args.precision)
        except (ValueError, asymptotic.PrecisionError) as exc:
            raise DomainError(str(exc))

        def num(x):
            if x is None:
                return None
            if isinstance(x, Fraction):
                return _fmt(x)
            return mpmath.nstr(x, 30)

        doc["check"] = {
            "n1": n1, "n2": n2, "precision": args.precision,
            "series_difference": num(rep.series_difference),
            "direct_difference": num(rep.direct_difference),
            "error": num(rep.error),
            "first_omitted_term": num(rep.omitted_term),
            "euler_maclaurin_error": num(rep.euler_maclaurin_error),
            "within_bound": rep.within_bound,
        }
    return doc


# ---------------------------------------------------------------------------
# riddle


def cmd_riddle(args) -> dict:
    rep = riddle.solve_riddle(args.c_scale, args.alt_x5)
    doc = {
        "command": "riddle",
        "c_scale": _fmt(rep.c_scale),
        "a": [str(v) for v in rep.a],
        "d": str(rep.d),
        "A26": str(rep.A26),
        "D": str(rep.D),
        "lists": {k: [str(v) for v in vs] for k, vs in rep.lists.items()},
        "scalings": {k: _fmt(v) for k, v in rep.scalings.items()},
        "x": [_fmt(v) for v in rep.x],
        "integral": rep.integral,
        "letters": rep.letters,
        "name": rep.name,
    }
    if rep.alt_x5 is not None:
        doc["alt_x5"] = _fmt(rep.alt_x5)
    return doc


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> dict:
    results = []
    for crit, failures, secs in checks.run_suite(args.suite):
        results.append({
            "criterion": crit.key,
            "title": crit.title,
            "passed": not failures,
            "failures": failures,
            "note": checks.ERRATA.get(crit.key),
            "seconds": f"{secs:.3f}",
        })
    return {"command": "verify", "suite": args.suite,
            "passed": all(r["passed"] for r in results), "results": results}


# ---------------------------------------------------------------------------
# rendering


def _pretty(doc: dict) -> str:
    cmd = doc["command"]
    lines = []
    if cmd == "verify":
        for r in doc["results"]:
            mark = "PASS" if r["passed"] else "FAIL"
            lines.append(f"[{mark}] {r['criterion']:>3}  {r['title']}  ({r['seconds']}s)")
            lines.extend(f"        {f}" for f in r["failures"])
        lines.append("all passed" if doc["passed"] else "FAILURES")
        return "\n".join(lines)
    if "powers" in doc:
        v = doc["variable"]
        head = f"{cmd} " + " ".join(f"{k}={doc[k]}" for k in ("m", "r", "basis", "w") if k in doc)
        lines.append(head)
        lines.append(f"  denominator {doc['denominator']}")
        for k, num in zip(doc["powers"], doc["numerators"]):
            lines.append(f"  {v}^{k:<3} {num:>30}")
        if doc.get("factor") not in (None, "1"):
            lines.append(f"  times {doc['factor']}")
        return "\n".join(lines)
    if cmd == "asymptotic":
        lines.append(f"sum k^({doc['alpha']}) - {doc['constant']} ~")
        for e, c in zip(doc["exponents"], doc["coefficients"]):
            lines.append(f"  {c:>24} u^({e})")
        if "check" in doc:
            for k, val in doc["check"].items():
                lines.append(f"  {k}: {val}")
        return "\n".join(lines)
    width = max(len(k) for k in doc)
    for k, val in doc.items():
        lines.append(f"{k:<{width}}  {val if not isinstance(val, (list, dict)) else json.dumps(val)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="faulhaber", description="Exact power sums and Faulhaber coefficients.")
    p.add_argument("--pretty", action="store_true", help="human-readable output")
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="human-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser(parents=[common], name="powersum", help="r-fold power sums in several bases")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--basis", choices=("n", "faulhaber", "cfactorial", "stirling"), default="n")
    s.set_defaults(func=cmd_powersum)

    s = sub.add_parser(parents=[common], name="coeffs", help="Faulhaber coefficients A_k^(w)")
    s.add_argument("--w", type=_rational_arg, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--method", choices=METHODS, default="recurrence")
    s.add_argument("--cross-check", action="store_true")
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser(parents=[common], name="decompose", help="reflective decomposition of a table")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--values", required=True, help="JSON file: {x: value} or {lo, values}")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser(parents=[common], name="asymptotic", help="asymptotic series for sums of k^alpha")
    s.add_argument("--alpha", type=_rational_arg, required=True)
    s.add_argument("--terms", type=int, required=True)
    s.add_argument("--check", type=int, nargs=2, metavar=("N1", "N2"))
    s.add_argument("--precision", type=int, default=200)
    s.set_defaults(func=cmd_asymptotic)

    s = sub.add_parser(parents=[common], name="riddle", help="solve the 1631 riddle")
    s.add_argument("--c-scale", type=_rational_arg, default=Fraction(1, 4))
    s.add_argument("--alt-x5", action="store_true")
    s.set_defaults(func=cmd_riddle)

    s = sub.add_parser(parents=[common], name="verify", help="run the acceptance suites")
    s.add_argument("--suite", choices=checks.SUITES, default="all")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> tuple[int, dict | None, str]:
    """Parse and execute; returns ``(exit code, document, message)``.

    The message is the rendered output on success and the error text
    otherwise.
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, None, str(exc)
    try:
        doc = args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, None, str(exc)
    except (DomainError, ValueError, ArithmeticError) as exc:
        return EXIT_DOMAIN, None, f"{type(exc).__name__}: {exc}"
    code = EXIT_OK
    if doc.get("passed") is False or doc.get("agree") is False:
        code = EXIT_DOMAIN
    return code, doc, _pretty(doc) if args.pretty else json.dumps(doc, indent=2)


def main(argv=None) -> int:
    code, doc, message = run(sys.argv[1:] if argv is None else argv)
    if doc is None:
        print(json.dumps({"error": message, "exit_code": code}), file=sys.stderr)
    else:
        print(message)
    return code


if __name__ == "__main__":
    sys.exit(main())
