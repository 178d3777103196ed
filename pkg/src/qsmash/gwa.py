"""Generalized Weyl algebras of degree one over commutative bases.

Data: a commutative polynomial base D, an automorphism sigma of D, and a
distinguished element a.  The algebra has components D*v_n (n in Z) with
v_0 = 1 and

    v_n * d = sigma^n(d) * v_n          v_n * v_m = (n, m) * v_{n+m}

where the structure coefficient (n, m) is a product of sigma-shifts of a
when the two indices have opposite signs and 1 otherwise.  In particular
v_-1 * v_1 = a and v_1 * v_-1 = sigma(a).

The skew polynomial rings generated over D by two variables u, w with
u*d = sigma(d)*u, w*d = sigma^-1(d)*w and u*w - rho*w*u = b are the
degree-one examples; `ambiskew_form1` realizes one as a GWA by adjoining
H = w*u to the base, and `ambiskew_form3` instead adjoins the rescaled
Casimir C = rho*(w*u + alpha) with sigma(C) = rho*C, after solving
rho*alpha - sigma(alpha) = b coefficientwise (`solve_alpha`).

`e_structure` is the instance isomorphic to the subalgebra generated by
X, Y, E: base K[X, phi], sigma: X -> q*X, phi -> q^-1*phi, and
a = (phi - X)/(q^-1 - q) = Y*E; `to_algebra` is the isomorphism, sending
v_1 to E and v_-1 to Y.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import AlgebraElement, E, X, Y, monomial, one, phi
from .presented import QCAlgebra, QCElement
from .scalars import ONE, Scalar, coerce_scalar, q_power


class BaseAut:
    """Automorphism of a commutative QCAlgebra given by generator images.

    Images must be affine in their own generator (scale*g + offset with
    the offset free of g) so the inverse can be built by backsolving in
    dependency order.
    """

    __slots__ = ("algebra", "images")

    def __init__(self, algebra: QCAlgebra, images: Dict[str, QCElement]):
        if algebra.manifest()["twists"]:
            raise ValueError("BaseAut expects a commutative base")
        if set(images) != set(algebra.names):
            raise ValueError("need an image for every generator")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "images", dict(images))

    def __setattr__(self, *_):
        raise AttributeError("BaseAut is immutable")

    @classmethod
    def identity(cls, algebra: QCAlgebra) -> "BaseAut":
        return cls(algebra, {g: algebra.gen(g) for g in algebra.names})

    def apply(self, el: QCElement) -> QCElement:
        out = self.algebra.zero()
        for u, s in el.terms.items():
            img = self.algebra.one()
            for g, e in zip(self.algebra.names, u):
                if e:
                    img = img * self.images[g] ** e
            out = out + img.scale(s)
        return out

    def compose(self, other: "BaseAut") -> "BaseAut":
        return BaseAut(
            self.algebra, {g: self.apply(img) for g, img in other.images.items()}
        )

    def _affine_parts(self, g: str) -> Tuple[Scalar, QCElement]:
        """Split images[g] = scale*g + offset; reject non-affine images."""
        pos = self.algebra.names.index(g)
        unit = tuple(1 if k == pos else 0 for k in range(len(self.algebra.names)))
        scale = None
        offset: Dict[Tuple[int, ...], Scalar] = {}
        for u, s in self.images[g].terms.items():
            if u == unit:
                scale = s
            elif u[pos] == 0:
                offset[u] = s
            else:
                raise ValueError(f"image of {g} is not affine in {g}")
        if scale is None or scale.is_zero():
            raise ValueError(f"image of {g} has no invertible linear part")
        return scale, self.algebra.element(offset)

    def inverse(self) -> "BaseAut":
        names = self.algebra.names
        parts = {g: self._affine_parts(g) for g in names}
        deps = {
            g: {
                h
                for h in names
                if any(u[names.index(h)] for u in parts[g][1].terms)
            }
            for g in names
        }
        order: List[str] = []
        placed = set()
        while len(order) < len(names):
            progressed = False
            for g in names:
                if g not in placed and deps[g] <= placed:
                    order.append(g)
                    placed.add(g)
                    progressed = True
            if not progressed:
                raise ValueError("generator images depend on each other cyclically")
        inv_images: Dict[str, QCElement] = {}
        for g in order:
            scale, offset = parts[g]
            # offset references only generators already inverted
            moved = BaseAut(
                self.algebra,
                {h: inv_images.get(h, self.algebra.gen(h)) for h in names},
            ).apply(offset)
            inv_images[g] = (self.algebra.gen(g) - moved).scale(scale.inv())
        return BaseAut(self.algebra, inv_images)

    def is_diagonal(self) -> bool:
        try:
            return all(self._affine_parts(g)[1].is_zero() for g in self.algebra.names)
        except ValueError:
            return False

    def diagonal_scale(self, u: Tuple[int, ...]) -> Scalar:
        """sigma(monomial u) = scale * (monomial u) for diagonal sigma."""
        out = ONE
        for g, e in zip(self.algebra.names, u):
            if e:
                out = out * self._affine_parts(g)[0] ** e
        return out

    def __eq__(self, other):
        if not isinstance(other, BaseAut):
            return NotImplemented
        return self.algebra == other.algebra and self.images == other.images


class GWAData:
    __slots__ = ("base", "sigma", "a", "_powers", "_coeffs")

    def __init__(self, base: QCAlgebra, sigma: BaseAut, a: QCElement):
        if sigma.algebra != base:
            raise ValueError("sigma must act on the base")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "_powers", {0: BaseAut.identity(base)})
        object.__setattr__(self, "_coeffs", {})

    def __setattr__(self, *_):
        raise AttributeError("GWAData is immutable")

    def sigma_power(self, n: int) -> BaseAut:
        powers = self._powers
        if n not in powers:
            if n > 0:
                powers[n] = self.sigma.compose(self.sigma_power(n - 1))
            else:
                if -1 not in powers:
                    powers[-1] = self.sigma.inverse()
                powers[n] = powers[-1].compose(self.sigma_power(n + 1))
        return powers[n]

    def coeff(self, n: int, m: int) -> QCElement:
        """The structure coefficient (n, m) with v_n*v_m = (n,m)*v_{n+m}."""
        key = (n, m)
        if key not in self._coeffs:
            if n > 0 > m:
                t = min(n, -m)
                out = self.base.one()
                for k in range(n - t + 1, n + 1):
                    out = out * self.sigma_power(k).apply(self.a)
            elif n < 0 < m:
                t = min(-n, m)
                out = self.base.one()
                for k in range(n + 1, n + t + 1):
                    out = out * self.sigma_power(k).apply(self.a)
            else:
                out = self.base.one()
            self._coeffs[key] = out
        return self._coeffs[key]

    def bracket(self, n: int, m: int) -> QCElement:
        """sigma^(-n-m)((n, m)), computed by its own closed product form."""
        out = self.base.one()
        if n > 0 > m:
            t = min(n, -m)
            for k in range(-m - t + 1, -m + 1):
                out = out * self.sigma_power(k).apply(self.a)
        elif n < 0 < m:
            t = min(-n, m)
            for k in range(1 - m, t - m + 1):
                out = out * self.sigma_power(k).apply(self.a)
        return out

    # ------------------------------------------------------------ builders

    def element(self, comps: Dict[int, QCElement]) -> "GWAElement":
        return GWAElement(self, comps)

    def v(self, n: int) -> "GWAElement":
        return GWAElement(self, {n: self.base.one()})

    def from_base(self, d: QCElement) -> "GWAElement":
        return GWAElement(self, {0: d})

    def one(self) -> "GWAElement":
        return self.v(0)

    def zero(self) -> "GWAElement":
        return GWAElement(self, {})

    def __eq__(self, other):
        if not isinstance(other, GWAData):
            return NotImplemented
        return (
            self.base == other.base
            and self.sigma == other.sigma
            and self.a == other.a
        )


class GWAElement:
    __slots__ = ("data", "comps")

    def __init__(self, data: GWAData, comps: Optional[Dict[int, QCElement]] = None):
        clean: Dict[int, QCElement] = {}
        if comps:
            for n, d in comps.items():
                if not d.is_zero():
                    clean[n] = d
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "comps", clean)

    def __setattr__(self, *_):
        raise AttributeError("GWAElement is immutable")

    def is_zero(self) -> bool:
        return not self.comps

    def component(self, n: int) -> QCElement:
        return self.comps.get(n, self.data.base.zero())

    def __add__(self, other):
        if not isinstance(other, GWAElement) or self.data != other.data:
            return NotImplemented
        out = dict(self.comps)
        for n, d in other.comps.items():
            cur = out.get(n)
            cur = d if cur is None else cur + d
            if cur.is_zero():
                out.pop(n, None)
            else:
                out[n] = cur
        return GWAElement(self.data, out)

    def __sub__(self, other):
        if not isinstance(other, GWAElement) or self.data != other.data:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return GWAElement(self.data, {n: -d for n, d in self.comps.items()})

    def scale(self, s) -> "GWAElement":
        s = coerce_scalar(s)
        return GWAElement(self.data, {n: d.scale(s) for n, d in self.comps.items()})

    def __mul__(self, other):
        if not isinstance(other, GWAElement) or self.data != other.data:
            return NotImplemented
        data = self.data
        out: Dict[int, QCElement] = {}
        for n, d in self.comps.items():
            shift = data.sigma_power(n)
            for m, e in other.comps.items():
                piece = d * shift.apply(e) * data.coeff(n, m)
                slot = n + m
                cur = out.get(slot)
                cur = piece if cur is None else cur + piece
                if cur.is_zero():
                    out.pop(slot, None)
                else:
                    out[slot] = cur
        return GWAElement(data, out)

    def __eq__(self, other):
        if not isinstance(other, GWAElement):
            return NotImplemented
        return self.data == other.data and self.comps == other.comps

    def to_text(self) -> str:
        if not self.comps:
            return "0"
        chunks = []
        for n in sorted(self.comps):
            d = self.comps[n].to_text()
            if n == 0:
                chunks.append(f"({d})")
            else:
                chunks.append(f"({d}) * v_{n}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"<GWAElement {self.to_text()}>"


# ------------------------------------------------------- ambiskew bridges


def _adjoin(base: QCAlgebra, var: str) -> QCAlgebra:
    if var in base.names:
        raise ValueError(f"{var} already names a base generator")
    if base.invertible:
        raise ValueError("polynomial bases only")
    return QCAlgebra(base.names + (var,))


def _lift(el: QCElement, big: QCAlgebra) -> QCElement:
    pad = len(big.names) - len(el.algebra.names)
    return big.element({u + (0,) * pad: s for u, s in el.terms.items()})


def ambiskew_form1(
    sigma: BaseAut, b: QCElement, rho: Union[Scalar, int], var: str = "H"
) -> GWAData:
    """Present the ambiskew ring as a GWA by adjoining H = w*u.

    The extended automorphism sends H to rho*H + b, and a = H.
    """
    rho = coerce_scalar(rho)
    if rho.is_zero():
        raise ValueError("rho must be invertible")
    base = sigma.algebra
    big = _adjoin(base, var)
    images = {g: _lift(img, big) for g, img in sigma.images.items()}
    images[var] = big.gen(var).scale(rho) + _lift(b, big)
    return GWAData(big, BaseAut(big, images), big.gen(var))


def solve_alpha(
    sigma: BaseAut, b: QCElement, rho: Union[Scalar, int]
) -> QCElement:
    """Solve rho*alpha - sigma(alpha) = b for diagonal sigma.

    Works monomial by monomial: (rho - scale(m))*alpha_m = b_m, so a
    solution exists iff no monomial of b has sigma-scale equal to rho.
    """
    rho = coerce_scalar(rho)
    if not sigma.is_diagonal():
        raise ValueError("alpha solving needs a diagonal sigma")
    terms = {}
    for u, s in b.terms.items():
        gap = rho - sigma.diagonal_scale(u)
        if gap.is_zero():
            raise ValueError(f"resonant monomial {u}: rho equals its sigma-scale")
        terms[u] = s / gap
    return sigma.algebra.element(terms)


def ambiskew_form3(
    sigma: BaseAut, b: QCElement, rho: Union[Scalar, int], var: str = "C"
) -> Tuple[GWAData, QCElement]:
    """Present the ambiskew ring over D[C] with sigma(C) = rho*C.

    Returns the GWA (a = rho^-1*C - alpha) together with the alpha used,
    where C corresponds to rho*(w*u + alpha).
    """
    rho = coerce_scalar(rho)
    alpha = solve_alpha(sigma, b, rho)
    base = sigma.algebra
    big = _adjoin(base, var)
    images = {g: _lift(img, big) for g, img in sigma.images.items()}
    images[var] = big.gen(var).scale(rho)
    a = big.gen(var).scale(rho.inv()) - _lift(alpha, big)
    return GWAData(big, BaseAut(big, images), a), alpha


# ------------------------------------------- the X, Y, E subalgebra


def e_base() -> QCAlgebra:
    return QCAlgebra(("X", "phi"))


def e_sigma() -> BaseAut:
    alg = e_base()
    return BaseAut(
        alg,
        {
            "X": alg.gen("X").scale(q_power(1)),
            "phi": alg.gen("phi").scale(q_power(-1)),
        },
    )


def e_structure() -> GWAData:
    """The GWA isomorphic to the subalgebra generated by X, Y, E."""
    alg = e_base()
    a = (alg.gen("phi") - alg.gen("X")).scale((q_power(-1) - q_power(1)).inv())
    return GWAData(alg, e_sigma(), a)


def to_algebra(el: GWAElement) -> AlgebraElement:
    """The isomorphism onto the PBW algebra: v_1 -> E, v_-1 -> Y."""
    if el.data.base.names != ("X", "phi"):
        raise ValueError("element does not live in the X,Y,E structure")
    ph = phi()
    out = AlgebraElement()
    for n, d in el.comps.items():
        vn = E ** n if n >= 0 else Y ** (-n)
        img = AlgebraElement()
        for (xa, pp), s in d.terms.items():
            img = img + (monomial(a=xa) * ph ** pp).scale(s)
        out = out + img * vn
    return out


def random_gwa_element(data: GWAData, rng, max_index: int = 2, max_deg: int = 2):
    comps: Dict[int, QCElement] = {}
    pool = [ONE, -ONE, q_power(1), q_power(-1)]
    names = data.base.names
    for _ in range(rng.randint(1, 3)):
        n = rng.randint(-max_index, max_index)
        exps = [0] * len(names)
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(len(names))] += 1
        term = data.base.element({tuple(exps): rng.choice(pool)})
        cur = comps.get(n)
        comps[n] = term if cur is None else cur + term
    return GWAElement(data, comps)


def iso_check(rng, pairs: int = 200, max_index: int = 2, max_deg: int = 2) -> Tuple[bool, int]:
    """Sample the homomorphism property of `to_algebra` on random pairs."""
    data = e_structure()
    checked = 0
    for _ in range(pairs):
        u = random_gwa_element(data, rng, max_index, max_deg)
        w = random_gwa_element(data, rng, max_index, max_deg)
        if to_algebra(u * w) != to_algebra(u) * to_algebra(w):
            return False, checked
        if to_algebra(u + w) != to_algebra(u) + to_algebra(w):
            return False, checked
        checked += 1
    return True, checked
