import json
import math

import pytest

from cl2 import (E1, E3, CircularFamily, DecodeError, Empty, Finite,
                 HyperbolicUnitFamily, Multivector, NullCone, ParseError,
                 RootUnion, format_mv, from_json, parse_eval, to_json)
from cl2.textio import (MACHINE, multivector_from_json, rootset_from_json,
                        tokenize)

from conftest import S1_EXAMPLE, assert_close


class TestParseEval:
    def test_literal(self):
        assert parse_eval("1 - e3") == Multivector(1, 0, 0, -1)

    def test_zero_divisor(self):
        assert parse_eval("(1 + e1) * (1 - e1)") == Multivector()

    def test_s1_golden_value(self):
        assert parse_eval("sqrt(2) + 7*e1 + 4*e2 + 8*e3") == S1_EXAMPLE

    def test_e3_squared(self):
        assert_close(parse_eval("e3^2"), Multivector(-1), 1e-15)

    def test_caret_binds_tighter_than_minus(self):
        assert_close(parse_eval("-e3^2"), Multivector(1), 1e-15)
        assert_close(parse_eval("(-e3)^2"), Multivector(-1), 1e-15)

    def test_e12_alias(self):
        assert parse_eval("e12") == E3
        assert parse_eval("e1*e2") == E3

    def test_functions(self):
        assert parse_eval("conj(1 + e1 - e2)") == Multivector(1, -1, 1, 0)
        assert parse_eval("inv(1 - e3)") == Multivector(0.5, 0, 0, 0.5)
        assert parse_eval("exp(e1 + e3)") == Multivector(1, 1, 0, 1)
        assert parse_eval("sqrt(16)") == Multivector(4)

    def test_negative_exponent(self):
        assert_close(parse_eval("(1 - e3)^-1"), Multivector(0.5, 0, 0, 0.5), 1e-15)

    def test_numbers(self):
        assert parse_eval("7e1") == Multivector(70)
        assert parse_eval(".5 + 1.25e-1*e2") == Multivector(0.5, 0, 0.125, 0)
        assert parse_eval("  2\t*\ne1 ") == E1 * 2

    @pytest.mark.parametrize("text,position,kind", [
        ("1 +", 3, ParseError.SYNTAX),
        ("e4", 0, ParseError.LEXICAL),
        ("sqrt(e1)", 5, ParseError.DOMAIN),
        ("2^x", 2, ParseError.LEXICAL),
        ("2^1.5", 2, ParseError.SYNTAX),
        ("sqrt(-4)", 5, ParseError.DOMAIN),
        ("inv(1 + e1)", 4, ParseError.NONINVERTIBLE),
        ("(1 + e1)^-2", 8, ParseError.NONINVERTIBLE),
        ("2 e1", 2, ParseError.SYNTAX),
        ("(1", 2, ParseError.SYNTAX),
        ("E1", 0, ParseError.LEXICAL),
        ("1 # 2", 2, ParseError.LEXICAL),
        ("1e999", 0, ParseError.LEXICAL),
        ("exp(1000)", 0, ParseError.DOMAIN),
        ("", 0, ParseError.SYNTAX),
    ])
    def test_errors(self, text, position, kind):
        with pytest.raises(ParseError) as info:
            parse_eval(text)
        assert info.value.position == position
        assert info.value.kind == kind

    def test_non_ascii_bytes(self):
        with pytest.raises(ParseError) as info:
            parse_eval("1 + −e1".encode())
        assert info.value.position == 4

    def test_deep_nesting_is_an_error_not_a_crash(self):
        with pytest.raises(ParseError):
            parse_eval("(" * 5000 + "1" + ")" * 5000)
        with pytest.raises(ParseError):
            parse_eval("-" * 5000 + "1")

    def test_tokenize_positions(self):
        assert [t[2] for t in tokenize("2*e1 + 3")] == [0, 1, 2, 5, 7, 8]


class TestFormat:
    def test_human(self):
        assert format_mv(Multivector(), "human") == "0"
        assert format_mv(Multivector(1, 0, 0, -1)) == "1 - e3"
        assert format_mv(Multivector(0, -1, 2.5, 0)) == "-e1 + 2.5*e2"
        assert format_mv(Multivector(-2, 0, 0, 0)) == "-2"

    def test_machine(self):
        assert format_mv(Multivector(0.5, 0, 0, 0.25), MACHINE) == "0.5 + 0*e1 + 0*e2 + 0.25*e3"
        assert format_mv(Multivector(-1, 1e-300, -3, 1e22), MACHINE) == \
            "-1 + 1e-300*e1 - 3*e2 + 1e+22*e3"

    @pytest.mark.parametrize("a", [
        Multivector(0.1, -0.2, 1 / 3, -5e-324),
        Multivector(1.7976931348623157e308, 0, -2.2250738585072014e-308, 123456789.125),
        S1_EXAMPLE,
    ])
    def test_round_trip(self, a):
        for style in ("human", "machine"):
            back = parse_eval(format_mv(a, style))
            assert back == a
            assert all(math.copysign(1, x) == math.copysign(1, y) for x, y in zip(back, a))


class TestJson:
    def test_multivector(self):
        assert to_json(Multivector(1, 0, 0, -1)) == '{"s":1,"e1":0,"e2":0,"e3":-1}'
        assert multivector_from_json('{"s":1,"e1":0,"e2":0,"e3":-1}') == Multivector(1, 0, 0, -1)

    def test_rootsets(self):
        assert to_json(Empty()) == '{"kind":"empty"}'
        assert to_json(CircularFamily(1.0, (0.0, math.pi))) == \
            '{"kind":"circular_family","scale":1,"angles":[0,3.141592653589793]}'
        assert to_json(NullCone()) == '{"kind":"null_cone"}'

    @pytest.mark.parametrize("value", [
        Empty(), Empty("why"), NullCone(), HyperbolicUnitFamily(2 ** 0.25),
        Finite((E1, Multivector(0.1, 0.2, 0.3, 0.4))), Finite(()),
        CircularFamily(3.5, (0.1, 2.0)),
        RootUnion((CircularFamily(1.0, (0.0,)), HyperbolicUnitFamily(1.0))),
    ])
    def test_round_trip(self, value):
        assert from_json(to_json(value)) == value
        assert rootset_from_json(to_json(value)) == value

    @pytest.mark.parametrize("text", [
        '{"s":1,"e1":0,"e2":0}',
        '{"s":1,"e1":0,"e2":0,"e3":0,"e4":0}',
        '{"s":NaN,"e1":0,"e2":0,"e3":0}',
        '{"s":Infinity,"e1":0,"e2":0,"e3":0}',
        '{"s":"1","e1":0,"e2":0,"e3":0}',
        '{"s":true,"e1":0,"e2":0,"e3":0}',
        '{"s":1e400,"e1":0,"e2":0,"e3":0}',
        '{"kind":"finite"}',
        '{"kind":"empty","extra":1}',
        '{"kind":"circular_family","scale":1,"angles":3}',
        '{"kind":"wormhole"}',
        '[1,2,3,4]',
        '{"s":1',
    ])
    def test_decode_errors(self, text):
        with pytest.raises(DecodeError):
            from_json(text)

    def test_compact_and_ordered(self):
        obj = json.loads(to_json(Finite((E1,))))
        assert list(obj) == ["kind", "roots"]
        assert list(obj["roots"][0]) == ["s", "e1", "e2", "e3"]
