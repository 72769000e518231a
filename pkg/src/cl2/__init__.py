"""Arithmetic, polar forms, powers and roots in the Clifford algebra Cl2."""
from .classify import (Circular, EpsilonClass, HyperbolicCosh, HyperbolicSinh,
                       Parabolic, Sector, classify, epsilon_class, polar,
                       reconstruct)
from .errors import (BadExponent, Cl2Error, DecodeError, InvalidValue,
                     NonInvertible, Overflow, ParseError, ZeroElement)
from .multivector import (E1, E2, E3, ONE, ZERO, Multivector,
                          QuadraticInvariants, Tolerances, conj, inverse,
                          invariants, lorentz_inner, mul, parts)
from .oracle import exp_series, pow_naive, sample_in_sector, verify_root
from .textio import format_mv, from_json, parse_eval, to_json
from .transcend import (CircularFamily, Empty, Finite, HyperbolicUnitFamily,
                        NullCone, RootMode, RootUnion, exp, nth_roots, pow_int)

__version__ = "0.1.0"

__all__ = [
    "Circular",
    "EpsilonClass",
    "HyperbolicCosh",
    "HyperbolicSinh",
    "Parabolic",
    "Sector",
    "classify",
    "epsilon_class",
    "polar",
    "reconstruct",
    "BadExponent",
    "Cl2Error",
    "DecodeError",
    "InvalidValue",
    "NonInvertible",
    "Overflow",
    "ParseError",
    "ZeroElement",
    "E1",
    "E2",
    "E3",
    "ONE",
    "ZERO",
    "Multivector",
    "QuadraticInvariants",
    "Tolerances",
    "conj",
    "inverse",
    "invariants",
    "lorentz_inner",
    "mul",
    "parts",
    "CircularFamily",
    "Empty",
    "Finite",
    "HyperbolicUnitFamily",
    "NullCone",
    "RootMode",
    "RootUnion",
    "exp",
    "nth_roots",
    "pow_int",
    "exp_series",
    "pow_naive",
    "sample_in_sector",
    "verify_root",
    "format_mv",
    "from_json",
    "parse_eval",
    "to_json",
    "__version__",
]
