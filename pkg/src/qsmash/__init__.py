"""qsmash: exact computer algebra for a q-deformed smash product.

The algebra under study is generated by K (invertible), X, Y, E over the
rational function field Q(q), subject to

    E*K = q^-2*K*E    X*K = q^-1*K*X    Y*K = q*K*Y
    E*X = q*X*E       Y*X = q^-1*X*Y    E*Y = X + q^-1*Y*E

i.e. the smash product of the quantum plane on X, Y with the Hopf algebra
on K, E acting by K.X = q*X, K.Y = q^-1*Y, E.X = 0, E.Y = X.  The package
provides PBW normal forms, the prime spectrum as a verified poset, the
automorphism group, the generalized Weyl algebra picture, weight modules,
an HTTP service, and a CLI front-end.
"""

from .scalars import Scalar, q_power, ZERO, ONE, Q
from .algebra import (
    AlgebraElement,
    GENERATORS,
    K,
    X,
    Y,
    E,
    phi,
    monomial,
    one,
    zero,
    straighten_word,
    centralizer_basis,
    filtration_dim,
)
from .presented import PRESETS, PARAMETRIC_PRESETS, quotient
from .automorphisms import Automorphism, IDENTITY
from .parser import ParseError, parse_element, parse_scalar, parse_aut, evaluate
from .verify import run_suite, all_passed, SUITE_NAMES

__version__ = "0.1.0"

__all__ = [
    "Scalar",
    "q_power",
    "ZERO",
    "ONE",
    "Q",
    "AlgebraElement",
    "GENERATORS",
    "K",
    "X",
    "Y",
    "E",
    "phi",
    "monomial",
    "one",
    "zero",
    "straighten_word",
    "centralizer_basis",
    "filtration_dim",
    "PRESETS",
    "PARAMETRIC_PRESETS",
    "quotient",
    "Automorphism",
    "IDENTITY",
    "ParseError",
    "parse_element",
    "parse_scalar",
    "parse_aut",
    "evaluate",
    "run_suite",
    "all_passed",
    "SUITE_NAMES",
    "__version__",
]
