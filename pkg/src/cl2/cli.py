"""Command-line calculator.

Exit codes: 0 success, 1 parse error, 2 domain error, 3 usage error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .classify import (Circular, EpsilonClass, HyperbolicCosh, HyperbolicSinh,
                       classify, epsilon_class, polar, reconstruct)
from .errors import Cl2Error, ParseError
from .multivector import Multivector, Tolerances, inverse, invariants
from .oracle import exp_series, pow_naive, residual, verify_root
from .textio import (SCHEMA_VERSION, dumps_obj, format_mv, format_number,
                     mv_to_obj, parse_eval, rootset_to_obj)
from .transcend import (CircularFamily, Empty, Finite, HyperbolicUnitFamily,
                        NullCone, RootMode, RootUnion, exp, family_members,
                        nth_roots, pow_int)

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2, 3

# sample unit vectors printed for root families when --eps is not given
SAMPLE_EPS = {
    EpsilonClass.EMINUS1: (Multivector(0, 0, 0, 1), Multivector(0, 0, 0, -1), Multivector(0, 2, 2, 3)),
    EpsilonClass.E1: (Multivector(0, 1, 0, 0), Multivector(0, 0, 1, 0), Multivector(0, 1, 1, 1)),
    EpsilonClass.E0: (Multivector(), Multivector(0, 1, 0, 1), Multivector(0, 3, 4, 5)),
}


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _global_options(parser: argparse.ArgumentParser, suppress: bool):
    d = argparse.SUPPRESS
    parser.add_argument("--json", action="store_true", default=d if suppress else False,
                        help="emit JSON (schema cl2/1)")
    parser.add_argument("--tol", type=float, default=d if suppress else None,
                        help="relative classification tolerance (default 1e-10)")
    parser.add_argument("--verify", action="store_true", default=d if suppress else False,
                        help="re-check every result with the brute-force oracle")
    parser.add_argument("--stdin", action="store_true", default=d if suppress else False,
                        help="read one expression per line from stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cl2", description="Calculator for the Clifford algebra Cl2.")
    _global_options(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="sector, I/N/V and polar form")
    p.add_argument("expr", nargs="?")
    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr", nargs="?")
    p = sub.add_parser("exp", parents=[common], help="closed-form exponential")
    p.add_argument("expr", nargs="?")
    p = sub.add_parser("pow", parents=[common], help="integer power")
    p.add_argument("n", type=int)
    p.add_argument("expr", nargs="?")
    p = sub.add_parser("roots", parents=[common], help="all nth roots")
    p.add_argument("n", type=int)
    p.add_argument("expr", nargs="?")
    p.add_argument("--mode", choices=["paper", "complete"], default="paper")
    p.add_argument("--eps", help="unit vector at which to instantiate root families")
    p.add_argument("--strict-empty", action="store_true",
                   help="treat an empty root set as a domain error")
    p = sub.add_parser("verify", parents=[common], help="check w**n == a with the oracle")
    p.add_argument("n", type=int)
    p.add_argument("a", nargs="?")
    p.add_argument("w", nargs="?")
    return parser


# rendering -----------------------------------------------------------------

def _polar_obj(p) -> dict:
    if isinstance(p, HyperbolicCosh):
        return {"form": "hyperbolic_cosh", "sign": p.sign, "N": p.N, "theta": p.theta,
                "eps": mv_to_obj(p.eps)}
    if isinstance(p, Circular):
        return {"form": "circular", "N": p.N, "theta": p.theta, "eps": mv_to_obj(p.eps)}
    if isinstance(p, HyperbolicSinh):
        return {"form": "hyperbolic_sinh", "N": p.N, "theta": p.theta, "eps": mv_to_obj(p.eps)}
    return {"form": "parabolic", "kind": p.kind, "a0": p.a0, "im": mv_to_obj(p.im)}


def _polar_text(p) -> str:
    if isinstance(p, HyperbolicCosh):
        lead = "" if p.sign > 0 else "-"
        return (f"{lead}N*(cosh(theta) + eps*sinh(theta)) with N = {format_number(p.N)}, "
                f"theta = {format_number(p.theta)}, eps = {format_mv(p.eps)}")
    if isinstance(p, Circular):
        return (f"N*(cos(theta) + eps*sin(theta)) with N = {format_number(p.N)}, "
                f"theta = {format_number(p.theta)}, eps = {format_mv(p.eps)}")
    if isinstance(p, HyperbolicSinh):
        return (f"N*(sinh(theta) + eps*cosh(theta)) with N = {format_number(p.N)}, "
                f"theta = {format_number(p.theta)}, eps = {format_mv(p.eps)}")
    return f"a0 + Im(a) with a0 = {format_number(p.a0)}, Im(a) = {format_mv(p.im)} ({p.kind})"


def _describe_family(part) -> str:
    if isinstance(part, CircularFamily):
        angles = ", ".join(format_number(t) for t in part.angles)
        return (f"# family: {format_number(part.scale)}*(cos(phi) + eps*sin(phi)), "
                f"phi in {{{angles}}}, any eps in E-1")
    if isinstance(part, HyperbolicUnitFamily):
        return f"# family: {format_number(part.scale)}*eps, any eps in E1"
    return "# family: every eps in E0 (pure imaginary with V = 0, including 0)"


_FAMILY_CLASS = {CircularFamily: EpsilonClass.EMINUS1, HyperbolicUnitFamily: EpsilonClass.E1,
                 NullCone: EpsilonClass.E0}


# commands --------------------------------------------------------------------

class _Run:
    def __init__(self, args, tol: Tolerances, out):
        self.args = args
        self.tol = tol
        self.out = out

    def parse(self, text: Optional[str]) -> Multivector:
        if text is None:
            raise UsageError("missing expression")
        return parse_eval(text, self.tol)

    def emit(self, result: dict, lines: list[str]):
        if self.args.json:
            self.out.write(dumps_obj({"v": SCHEMA_VERSION, "command": self.args.command,
                                      "result": result}) + "\n")
        else:
            self.out.write("\n".join(lines) + "\n")

    def classify(self, expr):
        a = self.parse(expr)
        sector = classify(a, self.tol)
        inv = invariants(a)
        result = {"input": mv_to_obj(a), "sector": sector.value,
                  "I": inv.I, "N": inv.N, "V": inv.V}
        lines = [sector.describe(), f"I = {format_number(inv.I)}", f"N = {format_number(inv.N)}",
                 f"V = {format_number(inv.V)}"]
        if not a.is_zero():
            p = polar(a, self.tol)
            result["polar"] = _polar_obj(p)
            lines.append("polar: " + _polar_text(p))
            if self.args.verify:
                dev = (reconstruct(p) - a).norm()
                result["max_deviation"] = dev
                lines.append(f"reconstruction deviation = {format_number(dev)}")
        self.emit(result, lines)
        return EXIT_OK

    def eval(self, expr):
        a = self.parse(expr)
        self.emit({"value": mv_to_obj(a)}, [format_mv(a)])
        return EXIT_OK

    def exp(self, expr):
        a = self.parse(expr)
        value = exp(a, self.tol)
        result, lines = {"value": mv_to_obj(value)}, [format_mv(value)]
        if self.args.verify:
            dev = (exp_series(a, 40) - value).norm()
            result["max_deviation"] = dev
            lines.append(f"# series deviation = {format_number(dev)}")
        self.emit(result, lines)
        return EXIT_OK

    def pow(self, expr):
        a = self.parse(expr)
        n = self.args.n
        value = pow_int(a, n, self.tol)
        result, lines = {"value": mv_to_obj(value)}, [format_mv(value)]
        if self.args.verify:
            naive = pow_naive(a, n) if n >= 0 else pow_naive(inverse(a, self.tol), -n)
            dev = max(abs(x - y) for x, y in zip(value, naive))
            result["max_deviation"] = dev
            lines.append(f"# max deviation from repeated multiplication = {format_number(dev)}")
        self.emit(result, lines)
        return EXIT_OK

    def roots(self, expr):
        a = self.parse(expr)
        n = self.args.n
        roots = nth_roots(a, n, RootMode(self.args.mode), self.tol)
        parts = roots.parts if isinstance(roots, RootUnion) else (roots,)
        eps = None
        if self.args.eps is not None:
            eps = self.parse(self.args.eps)
            wanted = {_FAMILY_CLASS[type(p)] for p in parts if type(p) in _FAMILY_CLASS}
            if wanted and epsilon_class(eps, self.tol) not in wanted:
                raise DomainError(f"--eps {format_mv(eps)} is not in "
                                  + " or ".join(sorted(c.value for c in wanted)))
        lines: list[str] = []
        concrete: list[Multivector] = []
        for part in parts:
            if isinstance(part, Empty):
                lines.append("# no roots" + (f": {part.note}" if part.note else ""))
            elif isinstance(part, Finite):
                concrete.extend(part.roots)
                lines.extend(format_mv(w) for w in part.roots)
            else:
                lines.append(_describe_family(part))
                if eps is not None:
                    members = family_members(part, eps, self.tol)
                else:
                    members = [w for e in SAMPLE_EPS[_FAMILY_CLASS[type(part)]]
                               for w in family_members(part, e, self.tol)]
                concrete.extend(members)
                lines.extend(format_mv(w) for w in members)
        result = {"input": mv_to_obj(a), "n": n, "mode": self.args.mode,
                  "roots": rootset_to_obj(roots),
                  "members": [mv_to_obj(w) for w in concrete]}
        status = EXIT_OK
        if self.args.verify:
            checks = [verify_root(a, n, w, self.tol) for w in concrete]
            result["verified"] = checks
            lines.append(f"# oracle: {sum(checks)}/{len(checks)} members verified")
            if not all(checks):
                status = EXIT_DOMAIN
        self.emit(result, lines)
        if self.args.strict_empty and not concrete and isinstance(roots, Empty):
            raise DomainError(f"no {n}th roots of {format_mv(a)}")
        return status

    def verify(self, a_text, w_text):
        a, w = self.parse(a_text), self.parse(w_text)
        n = self.args.n
        ok = verify_root(a, n, w, self.tol)
        res = residual(a, n, w)
        self.emit({"a": mv_to_obj(a), "w": mv_to_obj(w), "n": n, "ok": ok, "residual": res},
                  ["true" if ok else "false", f"# residual = {format_number(res)}"])
        return EXIT_OK


def _dispatch(run: _Run, args, line: Optional[str] = None) -> int:
    cmd = args.command
    if cmd == "verify":
        if line is not None:
            if ";" not in line:
                raise UsageError("verify --stdin lines look like '<a> ; <w>'")
            a_text, w_text = line.split(";", 1)
        else:
            a_text, w_text = args.a, args.w
        return run.verify(a_text, w_text)
    if cmd in ("roots", "pow") and args.n is None:
        raise UsageError("missing n")
    return getattr(run, cmd)(line if line is not None else args.expr)


def _report(err, text: Optional[str], exc: Exception) -> int:
    if isinstance(exc, ParseError):
        err.write(f"error: {exc}\n")
        if text is not None:
            err.write(f"  {text}\n  {' ' * exc.position}^\n")
        if exc.kind in (ParseError.DOMAIN, ParseError.NONINVERTIBLE):
            return EXIT_DOMAIN
        return EXIT_PARSE
    err.write(f"error: {exc}\n")
    return EXIT_DOMAIN


def run(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        if args.command is None:
            raise UsageError("a command is required")
        tol = Tolerances() if args.tol is None else Tolerances(tau_class=args.tol)
        if not hasattr(args, "mode"):
            args.mode, args.eps, args.strict_empty = "paper", None, False
    except UsageError as exc:
        err.write(f"usage error: {exc}\n{parser.format_usage()}")
        return EXIT_USAGE
    except Cl2Error as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    runner = _Run(args, tol, out)
    lines = [ln.strip() for ln in stdin if ln.strip()] if args.stdin else [None]
    status = EXIT_OK
    for line in lines:
        try:
            code = _dispatch(runner, args, line)
        except UsageError as exc:
            err.write(f"usage error: {exc}\n")
            code = EXIT_USAGE
        except ParseError as exc:
            text = line if line is not None else _offending_text(args)
            code = _report(err, text, exc)
        except (DomainError, Cl2Error, ArithmeticError, ValueError) as exc:
            code = _report(err, None, exc)
        status = max(status, code)
    return status


def _offending_text(args) -> Optional[str]:
    # best effort: the expression argument most likely to have failed
    for name in ("expr", "a", "w", "eps"):
        text = getattr(args, name, None)
        if text is not None:
            try:
                parse_eval(text)
            except ParseError:
                return text
            except Exception:
                continue
    return None


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
