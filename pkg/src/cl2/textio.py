"""Text front end: expression evaluator, formatters and the JSON codec.

Expression grammar (ASCII only, whitespace ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" ["-"] digits)?
    atom   := number | "e1" | "e2" | "e3" | "e12"
            | "(" expr ")" | func "(" expr ")"
    func   := "conj" | "inv" | "exp" | "sqrt"

``^`` binds tighter than unary minus, so ``-e3^2`` is ``-(e3^2) = 1``.
Juxtaposition is not multiplication, and ``7e1`` is the float 70: a
basis coefficient needs an explicit ``*`` as in ``7*e1``.
"""
from __future__ import annotations

import json
import math
import re
from typing import Union

from .errors import Cl2Error, DecodeError, NonInvertible, ParseError
from .multivector import (DEFAULT_TOL, E1, E2, E3, Multivector, Tolerances,
                          conj, inverse)
from .transcend import (CircularFamily, Empty, Finite, HyperbolicUnitFamily,
                        NullCone, RootSet, RootUnion, exp, pow_int)

SCHEMA_VERSION = "cl2/1"
MAX_DEPTH = 100

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_WS = " \t\r\n\f\v"
_PUNCT = "+-*^()"

_BASIS = {"e1": E1, "e2": E2, "e3": E3, "e12": E3}
_FUNCS = ("conj", "inv", "exp", "sqrt")

# token kinds
NUM, IDENT, PUNCT, END = "number", "identifier", "punct", "end"


def tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split ``text`` into ``(kind, text, position)`` triples ending with END."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in _WS:
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((PUNCT, ch, i))
            i += 1
            continue
        if ch.isascii() and (ch.isdigit() or ch == "."):
            m = _NUMBER.match(text, i)
            if m is None:
                raise ParseError("malformed number", i, ParseError.LEXICAL)
            tokens.append((NUM, m.group(), i))
            i = m.end()
            continue
        if ch.isascii() and (ch.isalpha() or ch == "_"):
            m = _IDENT.match(text, i)
            word = m.group()
            if word not in _BASIS and word not in _FUNCS:
                raise ParseError(f"unknown identifier {word!r}", i, ParseError.LEXICAL)
            tokens.append((IDENT, word, i))
            i = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", i, ParseError.LEXICAL)
    tokens.append((END, "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, tol: Tolerances):
        self.tokens = tokenize(text)
        self.pos = 0
        self.tol = tol
        self.depth = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        kind, t, _ = self.tok
        return kind == PUNCT and t == text

    def expect(self, text: str):
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def fail(self, message: str):
        kind, t, where = self.tok
        found = "end of input" if kind == END else repr(t)
        raise ParseError(f"{message}, found {found}", where, ParseError.SYNTAX)

    def parse(self) -> Multivector:
        value = self.expr()
        if self.tok[0] != END:
            self.fail("expected operator")
        return value

    def expr(self) -> Multivector:
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Multivector:
        value = self.unary()
        while self.at("*"):
            self.advance()
            value = value * self.unary()
        return value

    def unary(self) -> Multivector:
        if self.at("-"):
            self.advance()
            self.enter()
            value = -self.unary()
            self.depth -= 1
            return value
        return self.power()

    def power(self) -> Multivector:
        base = self.atom()
        if not self.at("^"):
            return base
        caret = self.advance()
        negative = False
        if self.at("-"):
            self.advance()
            negative = True
        kind, digits, where = self.tok
        if kind != NUM or not digits.isdigit():
            raise ParseError("exponent must be an integer literal", where, ParseError.SYNTAX)
        self.advance()
        if len(digits) > 40:
            raise ParseError("exponent too large", where, ParseError.DOMAIN)
        n = -int(digits) if negative else int(digits)
        try:
            return pow_int(base, n, self.tol)
        except NonInvertible as exc:
            raise ParseError(str(exc), caret[2], ParseError.NONINVERTIBLE) from None
        except (Cl2Error, ArithmeticError, ValueError) as exc:
            raise ParseError(str(exc), caret[2], ParseError.DOMAIN) from None

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("expression nested too deeply", self.tok[2], ParseError.SYNTAX)

    def atom(self) -> Multivector:
        kind, text, where = self.tok
        if kind == NUM:
            self.advance()
            value = float(text)
            if not math.isfinite(value):
                raise ParseError("number out of range", where, ParseError.LEXICAL)
            return Multivector.scalar(value)
        if kind == IDENT:
            self.advance()
            if text in _BASIS:
                return _BASIS[text]
            self.expect("(")
            arg_pos = self.tok[2]
            arg = self.group()
            return self.call(text, arg, where, arg_pos)
        if self.at("("):
            self.advance()
            return self.group()
        self.fail("expected a number, basis element, function or '('")

    def group(self) -> Multivector:
        self.enter()
        value = self.expr()
        self.expect(")")
        self.depth -= 1
        return value

    def call(self, name: str, arg: Multivector, where: int, arg_pos: int) -> Multivector:
        if name == "conj":
            return conj(arg)
        if name == "inv":
            try:
                return inverse(arg, self.tol)
            except NonInvertible as exc:
                raise ParseError(str(exc), arg_pos, ParseError.NONINVERTIBLE) from None
        if name == "exp":
            try:
                return exp(arg, self.tol)
            except (Cl2Error, ArithmeticError) as exc:
                raise ParseError(str(exc), where, ParseError.DOMAIN) from None
        # sqrt: single-valued only on nonnegative scalars
        if arg.im.norm() != 0.0 or arg.s < 0:
            raise ParseError("sqrt needs a nonnegative scalar argument", arg_pos, ParseError.DOMAIN)
        return Multivector.scalar(math.sqrt(arg.s))


def parse_eval(text: Union[str, bytes], tol: Tolerances = DEFAULT_TOL) -> Multivector:
    """Evaluate an expression.  All failures surface as :class:`ParseError`."""
    if isinstance(text, (bytes, bytearray)):
        for i, byte in enumerate(text):
            if byte > 0x7F:
                raise ParseError("non-ASCII byte", i, ParseError.LEXICAL)
        text = text.decode("ascii")
    parser = _Parser(text, tol)
    try:
        return parser.parse()
    except ParseError:
        raise
    except RecursionError:
        raise ParseError("expression nested too deeply", 0, ParseError.SYNTAX) from None
    except (Cl2Error, ArithmeticError, ValueError) as exc:
        # overflow while multiplying or adding large literals
        raise ParseError(str(exc) or type(exc).__name__, parser.tok[2], ParseError.DOMAIN) from None


# formatting ------------------------------------------------------------------

def format_number(x: float) -> str:
    """Shortest round-trip decimal; integral values lose the trailing ``.0``."""
    r = repr(float(x))
    return r[:-2] if r.endswith(".0") else r


_NAMES = ("", "e1", "e2", "e3")

HUMAN, MACHINE = "human", "machine"


def format_mv(a: Multivector, style: str = HUMAN) -> str:
    coefs = a.coefficients()
    if style == MACHINE:
        out = format_number(coefs[0])
        for c, name in zip(coefs[1:], _NAMES[1:]):
            out += (" - " if c < 0 else " + ") + format_number(abs(c)) + "*" + name
        return out
    if style != HUMAN:
        raise ValueError(f"unknown style {style!r}")
    pieces = []
    for c, name in zip(coefs, _NAMES):
        if c == 0:
            continue
        mag = abs(c)
        if not name:
            body = format_number(mag)
        elif mag == 1:
            body = name
        else:
            body = format_number(mag) + "*" + name
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces) or "0"


# JSON ------------------------------------------------------------------------

def _jnum(x: float):
    # integral values print as JSON integers; json.dumps uses repr otherwise
    if x.is_integer() and abs(x) < 2.0 ** 53:
        return int(x)
    return x


def _reject_constant(name):
    raise DecodeError(f"non-finite number {name} in JSON")


def _num(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DecodeError(f"{what} must be a number, got {value!r}")
    try:
        x = float(value)
    except OverflowError:
        raise DecodeError(f"{what} out of range") from None
    if not math.isfinite(x):
        raise DecodeError(f"{what} must be finite")
    return x


def _keys(obj, expected: set, what: str):
    if not isinstance(obj, dict):
        raise DecodeError(f"{what} must be a JSON object")
    got = set(obj)
    if got != expected:
        missing, extra = expected - got, got - expected
        raise DecodeError(f"{what}: missing keys {sorted(missing)}, unexpected keys {sorted(extra)}")


def mv_to_obj(a: Multivector) -> dict:
    return {"s": _jnum(a.s), "e1": _jnum(a.x1), "e2": _jnum(a.x2), "e3": _jnum(a.x3)}


def mv_from_obj(obj) -> Multivector:
    _keys(obj, {"s", "e1", "e2", "e3"}, "multivector")
    return Multivector(*(_num(obj[k], k) for k in ("s", "e1", "e2", "e3")))


def rootset_to_obj(roots: RootSet) -> dict:
    if isinstance(roots, Empty):
        return {"kind": "empty", "note": roots.note} if roots.note else {"kind": "empty"}
    if isinstance(roots, Finite):
        return {"kind": "finite", "roots": [mv_to_obj(w) for w in roots.roots]}
    if isinstance(roots, CircularFamily):
        return {"kind": "circular_family", "scale": _jnum(roots.scale),
                "angles": [_jnum(t) for t in roots.angles]}
    if isinstance(roots, HyperbolicUnitFamily):
        return {"kind": "hyperbolic_unit_family", "scale": _jnum(roots.scale)}
    if isinstance(roots, NullCone):
        return {"kind": "null_cone"}
    if isinstance(roots, RootUnion):
        return {"kind": "union", "parts": [rootset_to_obj(p) for p in roots.parts]}
    raise TypeError(f"not a root set: {roots!r}")


def rootset_from_obj(obj) -> RootSet:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DecodeError("root set must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "empty":
        if "note" in obj:
            _keys(obj, {"kind", "note"}, "empty")
            if not isinstance(obj["note"], str):
                raise DecodeError("note must be a string")
            return Empty(obj["note"])
        _keys(obj, {"kind"}, "empty")
        return Empty()
    if kind == "finite":
        _keys(obj, {"kind", "roots"}, "finite")
        if not isinstance(obj["roots"], list):
            raise DecodeError("roots must be a list")
        return Finite(tuple(mv_from_obj(w) for w in obj["roots"]))
    if kind == "circular_family":
        _keys(obj, {"kind", "scale", "angles"}, "circular_family")
        if not isinstance(obj["angles"], list):
            raise DecodeError("angles must be a list")
        return CircularFamily(_num(obj["scale"], "scale"),
                              tuple(_num(t, "angle") for t in obj["angles"]))
    if kind == "hyperbolic_unit_family":
        _keys(obj, {"kind", "scale"}, "hyperbolic_unit_family")
        return HyperbolicUnitFamily(_num(obj["scale"], "scale"))
    if kind == "null_cone":
        _keys(obj, {"kind"}, "null_cone")
        return NullCone()
    if kind == "union":
        _keys(obj, {"kind", "parts"}, "union")
        if not isinstance(obj["parts"], list):
            raise DecodeError("parts must be a list")
        return RootUnion(tuple(rootset_from_obj(p) for p in obj["parts"]))
    raise DecodeError(f"unknown root set kind {kind!r}")


def dumps_obj(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


def to_json(value: Union[Multivector, RootSet]) -> str:
    if isinstance(value, Multivector):
        return dumps_obj(mv_to_obj(value))
    return dumps_obj(rootset_to_obj(value))


def _load(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise DecodeError(str(exc)) from None


def multivector_from_json(text: str) -> Multivector:
    return mv_from_obj(_load(text))


def rootset_from_json(text: str) -> RootSet:
    return rootset_from_obj(_load(text))


def from_json(text: str) -> Union[Multivector, RootSet]:
    """Decode either payload type; objects with a ``kind`` key are root sets."""
    obj = _load(text)
    if isinstance(obj, dict) and "kind" in obj:
        return rootset_from_obj(obj)
    return mv_from_obj(obj)
