"""Quantum-commutative presented algebras and the factor maps onto them.

Every proper factor of the smash-product algebra used here is generated
by pairwise q-commuting variables: g_j * g_i = q^(c_ji) * g_i * g_j for
generators listed in a fixed order, with an antisymmetric integer twist
matrix c.  `QCAlgebra` carries such a presentation (some generators may
be invertible), `QCElement` its elements in straightened form, and
`QuotientMap` a homomorphism from the PBW algebra determined by images
of K, K^-1, X, Y, E.

Built-in maps (see `quotient`):

    A_mod_X       kill X
    A_mod_phi     kill phi = X + (q^-1 - q)*Y*E, so X maps to (q - q^-1)*Y*E
    A_mod_Y       kill X and Y
    A_mod_E       kill X and E
    A_mod_YE      kill X, Y, E (Laurent polynomials in K)
    L             kill X, Y, E and send K to a chosen nonzero scalar
    Ybb           kill X and E, then invert Y
    A_mod_X_q     kill X, pin (1-q^2)*E*Y^2*K^-1 to a nonzero scalar zeta
    A_mod_phi_r   kill phi, pin X*Y*K to a nonzero scalar zeta

The last two land in the Y-inverted algebra, with E (and X) expressed in
Laurent monomials of K and Y.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .algebra import AlgebraElement
from .scalars import ONE, ZERO, Scalar, coerce_scalar, q_power

Exponents = Tuple[int, ...]


class QCAlgebra:
    """Presentation with q-commuting generators, some invertible."""

    __slots__ = ("names", "invertible", "_twist", "_index")

    def __init__(
        self,
        names: Sequence[str],
        invertible: Iterable[str] = (),
        twists: Optional[Dict[Tuple[str, str], int]] = None,
    ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        index = {g: p for p, g in enumerate(names)}
        inv = frozenset(invertible)
        if not inv <= set(names):
            raise ValueError("invertible set names unknown generators")
        n = len(names)
        matrix = [[0] * n for _ in range(n)]
        for (later, earlier), c in (twists or {}).items():
            j, i = index[later], index[earlier]
            if j <= i:
                raise ValueError(f"twist ({later},{earlier}) not in generator order")
            matrix[j][i] = c
            matrix[i][j] = -c
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "invertible", inv)
        object.__setattr__(self, "_twist", matrix)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, *_):
        raise AttributeError("QCAlgebra is immutable")

    def twist(self, later: str, earlier: str) -> int:
        return self._twist[self._index[later]][self._index[earlier]]

    def crossing(self, u: Exponents, v: Exponents) -> int:
        """q-exponent picked up straightening (monomial u) * (monomial v)."""
        total = 0
        for i, vi in enumerate(v):
            if not vi:
                continue
            for j in range(i + 1, len(u)):
                if u[j]:
                    total += self._twist[j][i] * u[j] * vi
        return total

    def _check_exponents(self, exps: Exponents) -> None:
        if len(exps) != len(self.names):
            raise ValueError("exponent tuple has wrong length")
        for g, e in zip(self.names, exps):
            if e < 0 and g not in self.invertible:
                raise ValueError(f"generator {g} is not invertible")

    # -------------------------------------------------------- elements

    def element(self, terms: Dict[Exponents, Scalar]) -> "QCElement":
        return QCElement(self, terms)

    def monomial(self, coeff=1, **exps) -> "QCElement":
        unknown = set(exps) - set(self.names)
        if unknown:
            raise ValueError(f"unknown generators {sorted(unknown)}")
        vec = tuple(exps.get(g, 0) for g in self.names)
        return QCElement(self, {vec: coerce_scalar(coeff)})

    def gen(self, name: str) -> "QCElement":
        return self.monomial(**{name: 1})

    def one(self) -> "QCElement":
        return QCElement(self, {(0,) * len(self.names): ONE})

    def zero(self) -> "QCElement":
        return QCElement(self, {})

    # ------------------------------------------------------ enumeration

    def monomials(self, n: int) -> Iterator[Exponents]:
        """Exponent vectors of degree <= n.

        Degree counts non-invertible exponents; invertible generators
        contribute no degree but their exponents are windowed to |e| <= n
        so the enumeration stays finite.
        """
        ranges = []
        for g in self.names:
            if g in self.invertible:
                ranges.append(range(-n, n + 1))
            else:
                ranges.append(range(0, n + 1))
        for exps in itertools.product(*ranges):
            deg = sum(e for g, e in zip(self.names, exps) if g not in self.invertible)
            if deg <= n:
                yield exps

    def center_basis(self, n: int) -> List["QCElement"]:
        """Monomial basis of the degree <= n slice of the center.

        A monomial g^u is central exactly when sum_j c(j,t) u_j = 0 for
        every generator index t, a Z-linear condition on the exponents.
        """
        found = []
        for u in self.monomials(n):
            if all(
                sum(self._twist[j][t] * u[j] for j in range(len(u))) == 0
                for t in range(len(u))
            ):
                found.append(u)
        found.sort(key=lambda u: (sum(abs(e) for e in u), tuple(-e for e in u)))
        return [QCElement(self, {u: ONE}) for u in found]

    def manifest(self) -> dict:
        twists = {}
        for j in range(len(self.names)):
            for i in range(j):
                if self._twist[j][i]:
                    twists[f"{self.names[j]},{self.names[i]}"] = self._twist[j][i]
        return {
            "generators": list(self.names),
            "invertible": sorted(self.invertible),
            "twists": twists,
        }

    def __eq__(self, other):
        if not isinstance(other, QCAlgebra):
            return NotImplemented
        return (
            self.names == other.names
            and self.invertible == other.invertible
            and self._twist == other._twist
        )

    def __repr__(self):
        return f"<QCAlgebra {'*'.join(self.names) or '1'}>"


class QCElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QCAlgebra, terms: Optional[Dict[Exponents, Scalar]] = None):
        clean: Dict[Exponents, Scalar] = {}
        if terms:
            for u, s in terms.items():
                algebra._check_exponents(u)
                s = coerce_scalar(s)
                if not s.is_zero():
                    clean[u] = s
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("QCElement is immutable")

    def _same(self, other: "QCElement") -> None:
        if self.algebra != other.algebra:
            raise ValueError("elements live in different algebras")

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, u: Exponents) -> Scalar:
        return self.terms.get(u, ZERO)

    def support(self) -> List[Exponents]:
        return sorted(self.terms, key=lambda u: (sum(abs(e) for e in u), tuple(-e for e in u)))

    def is_scalar(self) -> bool:
        unit = (0,) * len(self.algebra.names)
        return not self.terms or set(self.terms) == {unit}

    def scalar_value(self) -> Scalar:
        unit = (0,) * len(self.algebra.names)
        if not self.terms:
            return ZERO
        if set(self.terms) != {unit}:
            raise ValueError("not a scalar element")
        return self.terms[unit]

    def __add__(self, other):
        if not isinstance(other, QCElement):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for u, s in other.terms.items():
            cur = out.get(u)
            cur = s if cur is None else cur + s
            if cur.is_zero():
                out.pop(u, None)
            else:
                out[u] = cur
        return QCElement(self.algebra, out)

    def __sub__(self, other):
        if not isinstance(other, QCElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QCElement(self.algebra, {u: -s for u, s in self.terms.items()})

    def scale(self, s) -> "QCElement":
        s = coerce_scalar(s)
        if s.is_zero():
            return QCElement(self.algebra, {})
        return QCElement(self.algebra, {u: s * c for u, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, QCElement):
            self._same(other)
            out: Dict[Exponents, Scalar] = {}
            for u, su in self.terms.items():
                for v, sv in other.terms.items():
                    w = tuple(a + b for a, b in zip(u, v))
                    s = su * sv * q_power(self.algebra.crossing(u, v))
                    cur = out.get(w)
                    cur = s if cur is None else cur + s
                    if cur.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = cur
            return QCElement(self.algebra, out)
        try:
            return self.scale(coerce_scalar(other))
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(coerce_scalar(other))
        except TypeError:
            return NotImplemented

    def invert(self) -> "QCElement":
        if len(self.terms) != 1:
            raise ValueError("only monomials in invertible generators invert")
        (u, s), = self.terms.items()
        w = tuple(-e for e in u)
        self.algebra._check_exponents(w)
        # s*g^u * t*g^w = s*t*q^crossing(u,w) must be 1
        t = (s * q_power(self.algebra.crossing(u, w))).inv()
        return QCElement(self.algebra, {w: t})

    def __pow__(self, k: int) -> "QCElement":
        if not isinstance(k, int):
            raise TypeError("exponents must be integers")
        if k < 0:
            return self.invert() ** (-k)
        out = self.algebra.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, QCElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_text(self) -> str:
        from .algebra import _coeff_text  # same coefficient formatting

        if not self.terms:
            return "0"
        chunks: List[str] = []
        for u in self.support():
            s = self.terms[u]
            sign = s.leading_sign()
            mag = s if sign > 0 else -s
            parts = []
            for g, e in zip(self.algebra.names, u):
                if e == 1:
                    parts.append(g)
                elif e:
                    parts.append(f"{g}^{e}")
            mono = "*".join(parts)
            if not mono:
                body = _coeff_text(mag)
            elif mag.is_one():
                body = mono
            else:
                body = f"{_coeff_text(mag)} * {mono}"
            if not chunks:
                chunks.append(body if sign > 0 else "-" + body)
            else:
                chunks.append((" + " if sign > 0 else " - ") + body)
        return "".join(chunks)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<QCElement {self.to_text()}>"


# -------------------------------------------------------------- factor maps


class QuotientMap:
    """Homomorphism from the PBW algebra into a QCAlgebra.

    Determined by images of the five generator symbols; well defined as
    an algebra map exactly when the images satisfy the defining relations
    (checked by `check_well_defined`, which must be consulted before
    trusting `project`).
    """

    __slots__ = ("name", "target", "images", "param")

    def __init__(
        self,
        name: str,
        target: QCAlgebra,
        images: Dict[str, QCElement],
        param: Optional[Scalar] = None,
    ):
        missing = {"K", "Kinv", "X", "Y", "E"} - set(images)
        if missing:
            raise ValueError(f"missing images for {sorted(missing)}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", dict(images))
        object.__setattr__(self, "param", param)

    def __setattr__(self, *_):
        raise AttributeError("QuotientMap is immutable")

    def check_well_defined(self) -> List[Tuple[str, bool]]:
        """Evaluate each defining relation on the generator images."""
        K, Ki = self.images["K"], self.images["Kinv"]
        X, Y, E = self.images["X"], self.images["Y"], self.images["E"]
        one = self.target.one()
        checks = [
            ("K*Kinv = 1", K * Ki - one),
            ("Kinv*K = 1", Ki * K - one),
            ("E*K = q^-2*K*E", E * K - (K * E).scale(q_power(-2))),
            ("X*K = q^-1*K*X", X * K - (K * X).scale(q_power(-1))),
            ("Y*K = q*K*Y", Y * K - (K * Y).scale(q_power(1))),
            ("E*X = q*X*E", E * X - (X * E).scale(q_power(1))),
            ("Y*X = q^-1*X*Y", Y * X - (X * Y).scale(q_power(-1))),
            ("E*Y = X + q^-1*Y*E", E * Y - X - (Y * E).scale(q_power(-1))),
        ]
        return [(name, rel.is_zero()) for name, rel in checks]

    def project(self, el: AlgebraElement) -> QCElement:
        out = self.target.zero()
        for (i, a, b, c), s in el.terms.items():
            k_img = self.images["K"] if i >= 0 else self.images["Kinv"]
            img = k_img ** abs(i)
            img = img * self.images["X"] ** a
            img = img * self.images["Y"] ** b
            img = img * self.images["E"] ** c
            out = out + img.scale(s)
        return out

    def __repr__(self):
        extra = f"({self.param})" if self.param is not None else ""
        return f"<QuotientMap {self.name}{extra}>"


def _kye_algebra(ey_twist: int) -> QCAlgebra:
    return QCAlgebra(
        ("K", "Y", "E"),
        invertible={"K"},
        twists={("Y", "K"): 1, ("E", "K"): -2, ("E", "Y"): ey_twist},
    )


def _ybb_algebra() -> QCAlgebra:
    return QCAlgebra(("K", "Y"), invertible={"K", "Y"}, twists={("Y", "K"): 1})


PRESETS: Tuple[str, ...] = (
    "A_mod_X",
    "A_mod_phi",
    "A_mod_Y",
    "A_mod_E",
    "A_mod_YE",
    "L",
    "Ybb",
    "A_mod_X_q",
    "A_mod_phi_r",
)

PARAMETRIC_PRESETS: Tuple[str, ...] = ("L", "A_mod_X_q", "A_mod_phi_r")


def quotient(name: str, param: Optional[Union[Scalar, int]] = None) -> QuotientMap:
    """Build one of the named factor maps; see the module docstring."""
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    if name in PARAMETRIC_PRESETS:
        if param is None:
            raise ValueError(f"preset {name} needs a nonzero scalar parameter")
        param = coerce_scalar(param)
        if param.is_zero():
            raise ValueError(f"preset {name} needs a nonzero scalar parameter")
    elif param is not None:
        raise ValueError(f"preset {name} takes no parameter")

    if name == "A_mod_X":
        t = _kye_algebra(-1)
        images = {
            "K": t.gen("K"),
            "Kinv": t.monomial(K=-1),
            "X": t.zero(),
            "Y": t.gen("Y"),
            "E": t.gen("E"),
        }
        return QuotientMap(name, t, images)
    if name == "A_mod_phi":
        t = _kye_algebra(1)
        images = {
            "K": t.gen("K"),
            "Kinv": t.monomial(K=-1),
            "X": t.monomial(q_power(1) - q_power(-1), Y=1, E=1),
            "Y": t.gen("Y"),
            "E": t.gen("E"),
        }
        return QuotientMap(name, t, images)
    if name == "A_mod_Y":
        t = QCAlgebra(("K", "E"), invertible={"K"}, twists={("E", "K"): -2})
        images = {
            "K": t.gen("K"),
            "Kinv": t.monomial(K=-1),
            "X": t.zero(),
            "Y": t.zero(),
            "E": t.gen("E"),
        }
        return QuotientMap(name, t, images)
    if name == "A_mod_E":
        t = QCAlgebra(("K", "Y"), invertible={"K"}, twists={("Y", "K"): 1})
        images = {
            "K": t.gen("K"),
            "Kinv": t.monomial(K=-1),
            "X": t.zero(),
            "Y": t.gen("Y"),
            "E": t.zero(),
        }
        return QuotientMap(name, t, images)
    if name == "A_mod_YE":
        t = QCAlgebra(("K",), invertible={"K"})
        images = {
            "K": t.gen("K"),
            "Kinv": t.monomial(K=-1),
            "X": t.zero(),
            "Y": t.zero(),
            "E": t.zero(),
        }
        return QuotientMap(name, t, images)
    if name == "L":
        t = QCAlgebra(())
        images = {
            "K": t.element({(): param}),
            "Kinv": t.element({(): param.inv()}),
            "X": t.zero(),
            "Y": t.zero(),
            "E": t.zero(),
        }
        return QuotientMap(name, t, images, param=param)
    if name == "Ybb":
        t = _ybb_algebra()
        images = {
            "K": t.gen("K"),
            "Kinv": t.monomial(K=-1),
            "X": t.zero(),
            "Y": t.gen("Y"),
            "E": t.zero(),
        }
        return QuotientMap(name, t, images)
    if name == "A_mod_X_q":
        t = _ybb_algebra()
        # (1-q^2)*E*Y^2*K^-1 is pinned to param, forcing E into K*Y^-2
        e_img = t.monomial(param / (ONE - q_power(2)), K=1, Y=-2)
        images = {
            "K": t.gen("K"),
            "Kinv": t.monomial(K=-1),
            "X": t.zero(),
            "Y": t.gen("Y"),
            "E": e_img,
        }
        return QuotientMap(name, t, images, param=param)
    # A_mod_phi_r: X*Y*K pinned to param with phi killed
    t = _ybb_algebra()
    x_img = t.monomial(param, K=-1, Y=-1)
    e_img = t.monomial(param * q_power(2) / (q_power(2) - ONE), K=-1, Y=-2)
    images = {
        "K": t.gen("K"),
        "Kinv": t.monomial(K=-1),
        "X": x_img,
        "Y": t.gen("Y"),
        "E": e_img,
    }
    return QuotientMap("A_mod_phi_r", t, images, param=param)
