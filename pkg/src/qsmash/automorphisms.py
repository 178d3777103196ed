"""The automorphism group: scalings twisted by powers of K.

Each automorphism is determined by three nonzero scalars and an integer,

    aut(lam; mu; gamma; i):
        X |-> lam * K^i * X          Y |-> mu * K^-i * Y
        K |-> gamma * K              E |-> lam/mu * q^-2i * K^2i * E

and these exhaust the group.  Composition and inversion stay inside the
family with closed-form parameters; both are checked pointwise in the
test suite.  The normal element phi rescales the same way X does, and
the two distinguished products transform by

    phi*Y*K^-1  |->  lam*mu/gamma * q^i  * phi*Y*K^-1
    X*Y*K       |->  lam*mu*gamma * q^i  * X*Y*K,

which is what pushes the parametric primes around (`act_on_prime`).
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple, Union

from .algebra import AlgebraElement, E, K, X, Y, monomial, one, phi
from .scalars import Scalar, coerce_scalar, q_power
from .spectrum import PrimeIdeal

ScalarLike = Union[Scalar, int]


class Automorphism:
    __slots__ = ("lam", "mu", "gamma", "i", "_images")

    def __init__(self, lam: ScalarLike, mu: ScalarLike, gamma: ScalarLike, i: int):
        lam, mu, gamma = (coerce_scalar(s) for s in (lam, mu, gamma))
        if lam.is_zero() or mu.is_zero() or gamma.is_zero():
            raise ValueError("aut parameters lam, mu, gamma must be nonzero")
        if not isinstance(i, int):
            raise TypeError("the K-twist exponent must be an integer")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "_images", None)

    def __setattr__(self, *_):
        raise AttributeError("Automorphism is immutable")

    # ---------------------------------------------------------- action

    def images(self) -> Dict[str, AlgebraElement]:
        if self._images is None:
            i = self.i
            imgs = {
                "K": K.scale(self.gamma),
                "X": monomial(i=i, a=1, coeff=self.lam),
                "Y": monomial(i=-i, b=1, coeff=self.mu),
                "E": monomial(
                    i=2 * i, c=1, coeff=self.lam / self.mu * q_power(-2 * i)
                ),
            }
            imgs["Kinv"] = imgs["K"].invert()
            object.__setattr__(self, "_images", imgs)
        return self._images

    def apply(self, el: AlgebraElement) -> AlgebraElement:
        imgs = self.images()
        out = AlgebraElement()
        for (i, a, b, c), s in el.terms.items():
            img = imgs["K"] ** i
            if a:
                img = img * imgs["X"] ** a
            if b:
                img = img * imgs["Y"] ** b
            if c:
                img = img * imgs["E"] ** c
            out = out + img.scale(s)
        return out

    def check_relations(self) -> List[Tuple[str, bool]]:
        """The defining relations evaluated on the generator images."""
        iK, iX, iY, iE = (self.images()[g] for g in ("K", "X", "Y", "E"))
        checks = [
            ("E*K = q^-2*K*E", iE * iK - (iK * iE).scale(q_power(-2))),
            ("X*K = q^-1*K*X", iX * iK - (iK * iX).scale(q_power(-1))),
            ("Y*K = q*K*Y", iY * iK - (iK * iY).scale(q_power(1))),
            ("E*X = q*X*E", iE * iX - (iX * iE).scale(q_power(1))),
            ("Y*X = q^-1*X*Y", iY * iX - (iX * iY).scale(q_power(-1))),
            ("E*Y = X + q^-1*Y*E", iE * iY - iX - (iY * iE).scale(q_power(-1))),
        ]
        return [(name, rel.is_zero()) for name, rel in checks]

    # ------------------------------------------------------ group laws

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other, with closed-form parameters."""
        j = other.i
        return Automorphism(
            self.lam * other.lam * self.gamma ** j,
            self.mu * other.mu * self.gamma ** (-j),
            self.gamma * other.gamma,
            self.i + j,
        )

    def inverse(self) -> "Automorphism":
        return Automorphism(
            self.lam.inv() * self.gamma ** self.i,
            self.mu.inv() * self.gamma ** (-self.i),
            self.gamma.inv(),
            -self.i,
        )

    def is_identity(self) -> bool:
        return (
            self.lam.is_one()
            and self.mu.is_one()
            and self.gamma.is_one()
            and self.i == 0
        )

    # --------------------------------------------------- prime transport

    def z_factor(self) -> Scalar:
        return self.lam * self.mu / self.gamma * q_power(self.i)

    def c_factor(self) -> Scalar:
        return self.lam * self.mu * self.gamma * q_power(self.i)

    def act_on_prime(self, p: PrimeIdeal) -> PrimeIdeal:
        """The image ideal; only the parametric families actually move."""
        if p.kind == "P":
            return PrimeIdeal("P", p.param / self.gamma)
        if p.kind == "Q":
            return PrimeIdeal("Q", p.param / self.z_factor())
        if p.kind == "R":
            return PrimeIdeal("R", p.param / self.c_factor())
        return p

    # ----------------------------------------------------------- misc

    def literal(self) -> str:
        return (
            f"aut({self.lam.text()};{self.mu.text()};"
            f"{self.gamma.text()};{self.i})"
        )

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return (
            self.lam == other.lam
            and self.mu == other.mu
            and self.gamma == other.gamma
            and self.i == other.i
        )

    def __hash__(self):
        return hash((self.lam, self.mu, self.gamma, self.i))

    def __repr__(self):
        return f"<Automorphism {self.literal()}>"


IDENTITY = Automorphism(1, 1, 1, 0)


def random_automorphism(rng, max_twist: int = 5) -> Automorphism:
    pool = [
        Scalar(1),
        Scalar(-1),
        Scalar(2),
        q_power(1),
        q_power(-1),
        q_power(2) - Scalar(1),
    ]
    return Automorphism(
        rng.choice(pool), rng.choice(pool), rng.choice(pool),
        rng.randint(-max_twist, max_twist),
    )
