"""Exact arithmetic in Q(q), the rational function field in one indeterminate q.

Every coefficient in this package is a Scalar: a quotient of two
integer-coefficient polynomials in q, held in a canonical reduced form so
that equality is plain component comparison and hashing works.  Canonical
form means:

* numerator and denominator share no polynomial factor (their primitive
  parts are coprime in Z[q]),
* the integer contents of numerator and denominator are coprime, with the
  sign carried by the numerator,
* the denominator's leading coefficient is positive.

q stays formal throughout; no float ever appears.  In particular "q is not
a root of unity" holds by construction rather than by assumption, which is
what makes exact q-power bookkeeping (as_q_power) reliable.

Polynomials are tuples of ints, constant coefficient first, no trailing
zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

IntPoly = "tuple[int, ...]"

_ZERO_POLY: tuple = ()
_ONE_POLY = (1,)


def _trim(coeffs: Iterable[int]) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(f: tuple, g: tuple) -> tuple:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for k, c in enumerate(g):
        out[k] += c
    return _trim(out)


def _pneg(f: tuple) -> tuple:
    return tuple(-c for c in f)


def _pmul(f: tuple, g: tuple) -> tuple:
    if not f or not g:
        return _ZERO_POLY
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def _pcontent(f: tuple) -> int:
    c = 0
    for a in f:
        c = math.gcd(c, a)
    return c


def _pprimitive(f: tuple) -> tuple:
    """Divide out the (positive) integer content; sign pattern preserved."""
    c = _pcontent(f)
    if c in (0, 1):
        return f
    return tuple(a // c for a in f)


def _prem(f: tuple, g: tuple) -> tuple:
    """Remainder of f by g up to integer content (g nonzero).

    Pseudo-division with the content stripped after every step; only the
    gcd routine consumes this, and there a positive rational factor is
    irrelevant while unchecked coefficient growth is ruinous.
    """
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    while len(_trim(r)) - 1 >= dg:
        r = list(_trim(r))
        d = len(r) - 1 - dg
        c = r[-1]
        r = [x * lg for x in r]
        for k, gc in enumerate(g):
            r[d + k] -= c * gc
        r = list(_pprimitive(_trim(r)))
        if not r:
            break
    return _trim(r)


def _pgcd(f: tuple, g: tuple) -> tuple:
    """Primitive gcd in Z[q], positive leading coefficient; gcd(0,0) = 0."""
    if not f:
        f, g = g, f
    if not g:
        if not f:
            return _ZERO_POLY
        f = _pprimitive(f)
        return f if f[-1] > 0 else _pneg(f)
    # pull out the common power of q, then work with nonzero constant terms
    vf = next(k for k, a in enumerate(f) if a)
    vg = next(k for k, a in enumerate(g) if a)
    v = min(vf, vg)
    f = _pprimitive(f[vf:])
    g = _pprimitive(g[vg:])
    if len(f) == 1 or len(g) == 1:
        h: tuple = _ONE_POLY
    elif f == g or f == _pneg(g):
        h = f
    else:
        while g:
            r = _prem(f, g)
            f, g = g, _pprimitive(r)
        h = f
    if h[-1] < 0:
        h = _pneg(h)
    if v:
        h = (0,) * v + h
    return h


def _pdiv_exact(f: tuple, g: tuple) -> tuple:
    """f / g when g divides f in Z[q]."""
    if not f:
        return _ZERO_POLY
    rem = list(f)
    out = [0] * (len(f) - len(g) + 1)
    lg = g[-1]
    for d in range(len(out) - 1, -1, -1):
        c = rem[d + len(g) - 1]
        if c % lg != 0:
            raise ArithmeticError("inexact polynomial division")
        c //= lg
        out[d] = c
        if c:
            for k, gc in enumerate(g):
                rem[d + k] -= c * gc
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def _peval(f: tuple, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _poly_text(f: tuple) -> str:
    """Human/parser form, highest power first: 'q^3 - 2*q + 1'."""
    if not f:
        return "0"
    parts = []
    for exp in range(len(f) - 1, -1, -1):
        c = f[exp]
        if c == 0:
            continue
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        elif exp == 1:
            body = "q" if mag == 1 else f"{mag}*q"
        else:
            body = f"q^{exp}" if mag == 1 else f"{mag}*q^{exp}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


class Scalar:
    """Element of Q(q) in canonical reduced form. Immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, Scalar) or isinstance(den, Scalar):
            s = _coerce(num) / _coerce(den)
            object.__setattr__(self, "num", s.num)
            object.__setattr__(self, "den", s.den)
            return
        n = _as_poly(num)
        d = _as_poly(den)
        n, d = _canonical(n, d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> "Scalar":
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Scalar":
        return cls(f.numerator, f.denominator)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE_POLY and self.den == _ONE_POLY

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.num:
            return o
        if not o.num:
            return self
        if self.den == o.den:
            return Scalar._raw(*_canonical(_padd(self.num, o.num), self.den))
        t = _pgcd(self.den, o.den)
        if t == _ONE_POLY:
            # coprime denominators: the cross sum shares no factor with them
            num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
            return Scalar._raw(*_coprime_canonical(num, _pmul(self.den, o.den)))
        d1 = _pdiv_exact(self.den, t)
        d2 = _pdiv_exact(o.den, t)
        num = _padd(_pmul(self.num, d2), _pmul(o.num, d1))
        return Scalar._raw(*_canonical(num, _pmul(self.den, d2)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(_pneg(self.num), self.den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        # cross-cancel first; gcds against the small factors beat one big gcd
        n1, d1 = self.num, self.den
        n2, d2 = o.num, o.den
        if d2 != _ONE_POLY:
            g = _pgcd(n1, d2)
            if g != _ONE_POLY:
                n1 = _pdiv_exact(n1, g)
                d2 = _pdiv_exact(d2, g)
        if d1 != _ONE_POLY:
            g = _pgcd(n2, d1)
            if g != _ONE_POLY:
                n2 = _pdiv_exact(n2, g)
                d1 = _pdiv_exact(d1, g)
        return Scalar._raw(*_coprime_canonical(_pmul(n1, n2), _pmul(d1, d2)))

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return Scalar._raw(*_coprime_canonical(self.den, self.num))

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            raise TypeError("Scalar exponents must be integers")
        base = self
        if k < 0:
            base = self.inv()
            k = -k
        out = ONE
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons / hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- q-power bookkeeping -----------------------------------------------

    def as_q_power(self) -> Optional[int]:
        """The exponent j when self = q^j exactly, else None. Errors on 0."""
        if not self.num:
            raise ZeroDivisionError("as_q_power on zero")
        if self.num[-1] != 1 or any(self.num[:-1]):
            return None
        if self.den[-1] != 1 or any(self.den[:-1]):
            return None
        return (len(self.num) - 1) - (len(self.den) - 1)

    def monomial_parts(self) -> Optional[tuple]:
        """(coefficient, exponent) when self = c*q^j with c a nonzero
        rational written as a reduced integer pair; else None."""
        if not self.num or any(self.num[:-1]) or any(self.den[:-1]):
            return None
        return (self.num[-1], self.den[-1], (len(self.num) - 1) - (len(self.den) - 1))

    # -- evaluation (test oracles only; the kernel never specializes q) ----

    def at(self, q0: Fraction) -> Fraction:
        d = _peval(self.den, q0)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at sample point")
        return _peval(self.num, q0) / d

    # -- printing ----------------------------------------------------------

    def text(self) -> str:
        """Canonical text form, reparseable by the expression grammar."""
        if not self.num:
            return "0"
        parts = self.monomial_parts()
        if parts is not None:
            c_num, c_den, j = parts
            if c_den == 1:
                if j == 0:
                    return str(c_num)
                qpart = "q" if j == 1 else f"q^{j}"
                if c_num == 1:
                    return qpart
                if c_num == -1:
                    return "-" + qpart
                return f"{c_num}*{qpart}"
        num_terms = sum(1 for c in self.num if c)
        ntext = _poly_text(self.num)
        if self.den == _ONE_POLY:
            return ntext
        if num_terms > 1:
            ntext = f"({ntext})"
        den_terms = sum(1 for c in self.den if c)
        dtext = _poly_text(self.den)
        if den_terms > 1:
            dtext = f"({dtext})"
        return f"{ntext}/{dtext}"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Scalar({self.text()!r})"

    def leading_sign(self) -> int:
        """Sign of the numerator's leading coefficient (denominator is
        positive by canonical form); 0 for the zero scalar."""
        if not self.num:
            return 0
        return 1 if self.num[-1] > 0 else -1


def _as_poly(x) -> tuple:
    if isinstance(x, tuple):
        return _trim(x)
    if isinstance(x, list):
        return _trim(x)
    if isinstance(x, int):
        return (x,) if x else _ZERO_POLY
    raise TypeError(f"cannot build a polynomial from {x!r}")


def _canonical(num: tuple, den: tuple) -> "tuple[tuple, tuple]":
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return _ZERO_POLY, _ONE_POLY
    cn = _pcontent(num)
    cd = _pcontent(den)
    pn = tuple(a // cn for a in num)
    pd = tuple(a // cd for a in den)
    g = _pgcd(pn, pd)
    if g != _ONE_POLY:
        pn = _pdiv_exact(pn, g)
        pd = _pdiv_exact(pd, g)
    return _fix_contents(pn, pd, cn, cd)


def _coprime_canonical(num: tuple, den: tuple) -> "tuple[tuple, tuple]":
    """Canonical pair when the primitive parts are already coprime."""
    if not num:
        return _ZERO_POLY, _ONE_POLY
    cn = _pcontent(num)
    cd = _pcontent(den)
    return _fix_contents(
        tuple(a // cn for a in num), tuple(a // cd for a in den), cn, cd
    )


def _fix_contents(pn: tuple, pd: tuple, cn: int, cd: int) -> "tuple[tuple, tuple]":
    if pd[-1] < 0:
        pn, pd = _pneg(pn), _pneg(pd)
    r = math.gcd(cn, cd)
    cn //= r
    cd //= r
    if cn != 1:
        pn = tuple(a * cn for a in pn)
    if cd != 1:
        pd = tuple(a * cd for a in pd)
    return pn, pd


def _coerce(x) -> Optional[Scalar]:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar(x)
    if isinstance(x, Fraction):
        return Scalar(x.numerator, x.denominator)
    return None


def coerce_scalar(x: Union[Scalar, int, Fraction]) -> Scalar:
    s = _coerce(x)
    if s is None:
        raise TypeError(f"not a scalar: {x!r}")
    return s


@lru_cache(maxsize=None)
def q_power(k: int) -> Scalar:
    """q^k in canonical form, any k in Z."""
    if k >= 0:
        return Scalar._raw(_trim([0] * k + [1]), _ONE_POLY)
    return Scalar._raw(_ONE_POLY, _trim([0] * (-k) + [1]))


ZERO = Scalar._raw(_ZERO_POLY, _ONE_POLY)
ONE = Scalar._raw(_ONE_POLY, _ONE_POLY)
Q = q_power(1)
