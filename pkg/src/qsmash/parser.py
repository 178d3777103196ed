"""Expression front end: text in, normalized elements out.

The grammar is whitespace-insensitive and deliberately explicit about
multiplication, since the product is noncommutative and juxtaposition
would hide the intended factor order:

    expr    := ["-"] term { ("+" | "-") term }
    term    := factor { ("*" | "/") factor }
    factor  := atom [ "^" ["-"] integer ]
    atom    := symbol | integer | "(" expr ")"

``^`` binds tighter than ``*`` and ``/``, which bind tighter than the
additive operators; exponents must be integer literals.  ``/`` accepts
only scalar divisors.  ``q`` is reserved for the deformation parameter.
The symbols ``Z`` and ``C`` name the distinguished central elements of
the quotients by X and by phi respectively and resolve only in contexts
where those quotients are in play.

All syntax and symbol-resolution failures raise :class:`ParseError`
carrying a 1-based column.
"""

from __future__ import annotations

import re
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple, Union

from .algebra import GENERATORS, AlgebraElement, c_element, one as algebra_one, phi, z_element
from .automorphisms import Automorphism
from .modules import (
    LabeledModule,
    WeightModule,
    k_line_module,
    k_line_module_y,
    point_module,
    zeta_module_q,
    zeta_module_r,
)
from .presented import PRESETS, QCElement, quotient
from .scalars import Q, Scalar

__all__ = [
    "ParseError",
    "parse",
    "evaluate",
    "parse_element",
    "parse_scalar",
    "parse_aut",
    "parse_label",
    "parse_context",
    "parse_module_spec",
    "context_symbols",
]

Element = Union[AlgebraElement, QCElement]

# AST nodes are plain tuples: ("sym", name, col), ("int", n), ("neg", e),
# ("add"|"sub"|"mul", l, r), ("div", l, r, col), ("pow", e, k, col).
Expr = tuple


class ParseError(ValueError):
    """Bad syntax or an unresolvable symbol, locating the 1-based column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.message = message
        self.column = column


class Token(NamedTuple):
    kind: str  # "name" | "int" | "op" | "end"
    text: str
    column: int


_SCAN = re.compile(
    r"[ \t\r\n]*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>[0-9]+)|(?P<op>[-+*/^();,]))"
)


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _SCAN.match(text, pos)
        if match is None:
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                break
            column = pos + (len(rest) - len(stripped)) + 1
            raise ParseError(f"unrecognized character {stripped[0]!r}", column)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def at_op(self, *chars: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text in chars

    def expect_op(self, char: str) -> Token:
        tok = self.take()
        if tok.kind != "op" or tok.text != char:
            raise ParseError(f"expected '{char}'", tok.column)
        return tok

    def expect_end(self) -> None:
        tok = self.peek()
        if tok.kind == "end":
            return
        if tok.kind in ("name", "int") or (tok.kind == "op" and tok.text == "("):
            raise ParseError(
                f"unexpected {tok.text!r}; multiplication needs an explicit '*'",
                tok.column,
            )
        raise ParseError(f"unexpected {tok.text!r}", tok.column)

    def signed_int(self) -> int:
        sign = 1
        if self.at_op("-"):
            self.take()
            sign = -1
        tok = self.take()
        if tok.kind != "int":
            raise ParseError("expected an integer", tok.column)
        return sign * int(tok.text)

    def expr(self) -> Expr:
        if self.at_op("-"):
            self.take()
            node: Expr = ("neg", self.term())
        else:
            node = self.term()
        while self.at_op("+", "-"):
            op = self.take().text
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at_op("*", "/"):
            tok = self.take()
            rhs = self.factor()
            if tok.text == "*":
                node = ("mul", node, rhs)
            else:
                node = ("div", node, rhs, tok.column)
        return node

    def factor(self) -> Expr:
        node = self.atom()
        if self.at_op("^"):
            caret = self.take()
            sign = 1
            if self.at_op("-"):
                self.take()
                sign = -1
            tok = self.take()
            if tok.kind != "int":
                raise ParseError("expected an integer exponent", tok.column)
            node = ("pow", node, sign * int(tok.text), caret.column)
        return node

    def atom(self) -> Expr:
        tok = self.take()
        if tok.kind == "name":
            return ("sym", tok.text, tok.column)
        if tok.kind == "int":
            return ("int", int(tok.text))
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError("expected a symbol, a number, or '('", tok.column)


def parse(text: str) -> Expr:
    """Parse ``text`` to an abstract syntax tree without evaluating it."""
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    parser.expect_end()
    return node


def context_symbols(algebra: str = "A", param=None) -> Tuple[Dict[str, Element], Element]:
    """Symbol table and unit element for an algebra context.

    ``algebra`` is ``"A"`` for the full algebra or any quotient preset
    name; parametric presets take ``param``.  In quotient contexts the
    generator symbols resolve to their images, so evaluation lands in
    the factor algebra directly.
    """
    if algebra in (None, "A"):
        unit = algebra_one()
        symbols: Dict[str, Element] = dict(GENERATORS)
        symbols["phi"] = phi()
        symbols["q"] = unit.scale(Q)
        return symbols, unit
    qmap = quotient(algebra, param)
    unit = qmap.target.one()
    symbols = {name: qmap.images[name] for name in ("K", "Kinv", "X", "Y", "E")}
    symbols["phi"] = qmap.project(phi())
    symbols["q"] = unit.scale(Q)
    if algebra in ("A_mod_X", "A_mod_X_q"):
        symbols["Z"] = qmap.project(z_element())
    if algebra in ("A_mod_phi", "A_mod_phi_r"):
        symbols["C"] = qmap.project(c_element())
    return symbols, unit


def _eval_element(node: Expr, symbols: Dict[str, Element], unit: Element) -> Element:
    kind = node[0]
    if kind == "sym":
        try:
            return symbols[node[1]]
        except KeyError:
            raise ParseError(f"unknown symbol '{node[1]}' in this algebra", node[2]) from None
    if kind == "int":
        return unit.scale(node[1])
    if kind == "neg":
        return -_eval_element(node[1], symbols, unit)
    if kind == "add":
        return _eval_element(node[1], symbols, unit) + _eval_element(node[2], symbols, unit)
    if kind == "sub":
        return _eval_element(node[1], symbols, unit) - _eval_element(node[2], symbols, unit)
    if kind == "mul":
        return _eval_element(node[1], symbols, unit) * _eval_element(node[2], symbols, unit)
    if kind == "div":
        divisor = _eval_element(node[2], symbols, unit)
        if not divisor.is_scalar():
            raise ParseError("divisor must be a scalar", node[3])
        value = divisor.scalar_value()
        if value.is_zero():
            raise ParseError("division by zero", node[3])
        return _eval_element(node[1], symbols, unit).scale(value.inv())
    if kind == "pow":
        base = _eval_element(node[1], symbols, unit)
        try:
            return base ** node[2]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), node[3]) from None
    raise AssertionError(f"unhandled node {node!r}")


def _eval_scalar(node: Expr) -> Scalar:
    kind = node[0]
    if kind == "sym":
        if node[1] == "q":
            return Q
        raise ParseError(f"unknown symbol '{node[1]}' in a scalar", node[2])
    if kind == "int":
        return Scalar(node[1])
    if kind == "neg":
        return -_eval_scalar(node[1])
    if kind == "add":
        return _eval_scalar(node[1]) + _eval_scalar(node[2])
    if kind == "sub":
        return _eval_scalar(node[1]) - _eval_scalar(node[2])
    if kind == "mul":
        return _eval_scalar(node[1]) * _eval_scalar(node[2])
    if kind == "div":
        divisor = _eval_scalar(node[2])
        if divisor.is_zero():
            raise ParseError("division by zero", node[3])
        return _eval_scalar(node[1]) / divisor
    if kind == "pow":
        base = _eval_scalar(node[1])
        if node[2] < 0 and base.is_zero():
            raise ParseError("division by zero", node[3])
        return base ** node[2]
    raise AssertionError(f"unhandled node {node!r}")


def evaluate(expr: Expr, algebra: str = "A", param=None) -> Element:
    """Evaluate a parsed expression in the named algebra context."""
    symbols, unit = context_symbols(algebra, param)
    return _eval_element(expr, symbols, unit)


def parse_element(text: str, algebra: str = "A", param=None) -> Element:
    return evaluate(parse(text), algebra, param)


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar expression over ``q`` and integers."""
    return _eval_scalar(parse(text))


def _int_node(node: Expr, fallback_column: int) -> int:
    if node[0] == "int":
        return node[1]
    if node[0] == "neg":
        return -_int_node(node[1], fallback_column)
    column = node[2] if node[0] == "sym" else fallback_column
    raise ParseError("expected an integer", column)


def parse_aut(text: str) -> Automorphism:
    """Parse an ``aut(lambda;mu;gamma;i)`` literal."""
    parser = _Parser(_tokenize(text))
    head = parser.take()
    if head.kind != "name" or head.text != "aut":
        raise ParseError("expected an 'aut(lambda;mu;gamma;i)' literal", head.column)
    parser.expect_op("(")
    parts = [parser.expr()]
    while parser.at_op(";"):
        parser.take()
        parts.append(parser.expr())
    closer = parser.peek()
    parser.expect_op(")")
    parser.expect_end()
    if len(parts) != 4:
        raise ParseError("aut takes four ';'-separated arguments", closer.column)
    lam, mu, gamma = (_eval_scalar(part) for part in parts[:3])
    twist = _int_node(parts[3], closer.column)
    return Automorphism(lam, mu, gamma, twist)


def parse_label(text: str) -> Tuple[int, int]:
    """Parse a weight-module basis label ``(i,m)``."""
    parser = _Parser(_tokenize(text))
    parser.expect_op("(")
    i = parser.signed_int()
    parser.expect_op(",")
    m = parser.signed_int()
    parser.expect_op(")")
    parser.expect_end()
    return (i, m)


def parse_context(text: str) -> Tuple[str, Optional[Scalar]]:
    """Parse an algebra reference: ``A``, a preset name, or ``name(param)``."""
    parser = _Parser(_tokenize(text))
    head = parser.take()
    if head.kind != "name":
        raise ParseError("expected an algebra name", head.column)
    name = head.text
    param: Optional[Scalar] = None
    if parser.at_op("("):
        opener = parser.take()
        param = _eval_scalar(parser.expr())
        parser.expect_op(")")
        if name == "A":
            raise ParseError("the full algebra takes no parameter", opener.column)
    parser.expect_end()
    if name != "A" and name not in PRESETS:
        known = ", ".join(("A",) + PRESETS)
        raise ParseError(f"unknown algebra '{name}' (one of: {known})", head.column)
    return name, param


_MODULE_FAMILIES: Dict[str, Tuple[int, Callable[[List[Scalar]], LabeledModule]]] = {
    "weight": (2, lambda args: WeightModule(args[0], args[1])),
    "point": (1, lambda args: point_module(args[0])),
    "case-a": (1, lambda args: point_module(args[0])),
    "case-b": (1, lambda args: k_line_module(args[0])),
    "case-c": (1, lambda args: k_line_module_y(args[0])),
    "case-d": (2, lambda args: zeta_module_q(args[0], args[1])),
    "case-e": (2, lambda args: zeta_module_r(args[0], args[1])),
}


def parse_module_spec(text: str) -> LabeledModule:
    """Parse a module literal such as ``weight(2;q)`` or ``case-b(q^2)``.

    Families: weight(kappa;lambda) for the generic weight module;
    point(kappa) (alias case-a) for the one-dimensional module at K=kappa;
    case-b(lambda) and case-c(lambda) for the E- and Y-eigenline modules
    over the Laurent line in K; case-d(zeta;kappa) and case-e(zeta;kappa)
    for the down-shift modules attached to the Z and C fibers.
    """
    parser = _Parser(_tokenize(text))
    head = parser.take()
    if head.kind != "name":
        raise ParseError("expected a module family name", head.column)
    name = head.text
    if parser.at_op("-"):
        parser.take()
        tail = parser.take()
        if tail.kind != "name":
            raise ParseError("expected a module family name", tail.column)
        name = f"{name}-{tail.text}"
    if name not in _MODULE_FAMILIES:
        known = ", ".join(sorted(_MODULE_FAMILIES))
        raise ParseError(f"unknown module family '{name}' (one of: {known})", head.column)
    arity, build = _MODULE_FAMILIES[name]
    opener = parser.peek()
    args: List[Scalar] = []
    if parser.at_op("("):
        parser.take()
        args.append(_eval_scalar(parser.expr()))
        while parser.at_op(";"):
            parser.take()
            args.append(_eval_scalar(parser.expr()))
        parser.expect_op(")")
    parser.expect_end()
    if len(args) != arity:
        raise ParseError(f"'{name}' takes {arity} parameter(s)", opener.column)
    return build(args)
