"""Module-theoretic probes: weight modules, cyclic quotients, orbits.

Weight modules live on a lattice of labels (i, m): K acts diagonally
with eigenvalue q^-i * kappa on the i-th stratum, Y shifts i up, X
shifts i down against a geometric coefficient, and E mixes two labels:

    K . (i, m) = q^-i * kappa * (i, m)
    Y . (i, m) = (i+1, m)
    X . (i, m) = q^(i+2m) * lam * (i-1, m)
    E . (i, m) = q^-i/(q^-1 - q) * (i-2, m+1)
                 - q^(i+2m)*lam/(q^-1 - q) * (i-2, m)

The module axioms are not assumed: `check_axioms` re-verifies every
defining relation on any window of labels.  The normal element phi acts
by the clean up-shift (i, m) |-> q^-i * (i-1, m+1), which makes these
modules faithful; in contrast `CyclicQuotientModule` runs a left-module
of any factor algebra on the powers of a single invertible generator,
reducing all other generators to scalars, and those kill exactly the
kernel of the factor map (`annihilator_window` certifies this on a
filtration window).

The orbit utilities at the bottom classify maximal ideals (H - root) of
a polynomial base under sigma(H) = q*H, where sigma^j moves the root to
q^-j * root; `l_normal` is the sign test on the connecting exponents
between the roots of a "bottom" and a "top" coefficient, with a brute
scan (`l_normal_oracle`) as its independent check.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from .algebra import (
    AlgebraElement,
    Monomial,
    filtration_monomials,
    monomial_degree,
    phi,
)
from .linalg import SpanBuilder, kernel_basis, solve_in_span
from .presented import QuotientMap
from .scalars import ONE, ZERO, Scalar, coerce_scalar, q_power

Vec = Dict[Hashable, Scalar]

_GEN_ORDER = ("K", "Kinv", "X", "Y", "E")


class LabeledModule:
    """Left module with a distinguished basis; subclasses give the action
    of each generator on one basis label as a finite vector."""

    def act_generator(self, name: str, label) -> Vec:
        raise NotImplementedError

    def _apply_generator(self, name: str, vec: Vec) -> Vec:
        out: Vec = {}
        for label, s in vec.items():
            for tgt, c in self.act_generator(name, label).items():
                cur = out.get(tgt)
                cur = s * c if cur is None else cur + s * c
                if cur.is_zero():
                    out.pop(tgt, None)
                else:
                    out[tgt] = cur
        return out

    def act_monomial(self, m: Monomial, label) -> Vec:
        i, a, b, c = m
        vec: Vec = {label: ONE}
        for _ in range(c):
            vec = self._apply_generator("E", vec)
        for _ in range(b):
            vec = self._apply_generator("Y", vec)
        for _ in range(a):
            vec = self._apply_generator("X", vec)
        kname = "K" if i >= 0 else "Kinv"
        for _ in range(abs(i)):
            vec = self._apply_generator(kname, vec)
        return vec

    def act(self, el: AlgebraElement, vec: Vec) -> Vec:
        out: Vec = {}
        for m, s in el.terms.items():
            for label, t in vec.items():
                st = s * t
                for tgt, c in self.act_monomial(m, label).items():
                    cur = out.get(tgt)
                    cur = st * c if cur is None else cur + st * c
                    if cur.is_zero():
                        out.pop(tgt, None)
                    else:
                        out[tgt] = cur
        return out

    def basis_vector(self, label) -> Vec:
        return {label: ONE}

    # ------------------------------------------------------------ checks

    def check_axioms(self, labels: Iterable) -> List[Tuple[str, bool]]:
        """All defining relations plus invertibility of K on the labels."""
        labels = list(labels)

        def on_all(first: str, then: str) -> List[Vec]:
            return [
                self._apply_generator(then, self.act_generator(first, l))
                for l in labels
            ]

        def scaled(vecs: List[Vec], k: int) -> List[Vec]:
            s = q_power(k)
            return [{t: s * c for t, c in v.items()} for v in vecs]

        report = []
        pairs = [
            ("E*K = q^-2*K*E", on_all("K", "E"), scaled(on_all("E", "K"), -2)),
            ("X*K = q^-1*K*X", on_all("K", "X"), scaled(on_all("X", "K"), -1)),
            ("Y*K = q*K*Y", on_all("K", "Y"), scaled(on_all("Y", "K"), 1)),
            ("E*X = q*X*E", on_all("X", "E"), scaled(on_all("E", "X"), 1)),
            ("Y*X = q^-1*X*Y", on_all("X", "Y"), scaled(on_all("Y", "X"), -1)),
        ]
        for name, lhs, rhs in pairs:
            report.append((name, lhs == rhs))
        # E*Y = X + q^-1*Y*E needs the inhomogeneous term
        ok = True
        for l in labels:
            lhs = self._apply_generator("E", self.act_generator("Y", l))
            rhs = dict(self.act_generator("X", l))
            for t, c in self._apply_generator(
                "Y", self.act_generator("E", l)
            ).items():
                cur = rhs.get(t)
                cur = q_power(-1) * c if cur is None else cur + q_power(-1) * c
                if cur.is_zero():
                    rhs.pop(t, None)
                else:
                    rhs[t] = cur
            if lhs != rhs:
                ok = False
                break
        report.append(("E*Y = X + q^-1*Y*E", ok))
        unit_ok = all(
            self._apply_generator("Kinv", self.act_generator("K", l))
            == self.basis_vector(l)
            and self._apply_generator("K", self.act_generator("Kinv", l))
            == self.basis_vector(l)
            for l in labels
        )
        report.append(("K*K^-1 = K^-1*K = 1", unit_ok))
        return report

    def annihilator_window(self, n: int, labels: Sequence) -> List[AlgebraElement]:
        """Basis of {x in F_n : x kills every sample basis vector}.

        An honest lower bound on the annihilator: kernel elements are
        certified dead on the samples, nothing more.
        """
        labels = list(labels)
        columns = []
        for m in filtration_monomials(n):
            stacked: Vec = {}
            for li, label in enumerate(labels):
                for tgt, c in self.act_monomial(m, label).items():
                    stacked[(li, tgt)] = c
            columns.append((m, stacked))
        return [AlgebraElement(dict(comb)) for comb in kernel_basis(columns)]


class WeightModule(LabeledModule):
    """The faithful two-parameter weight module on labels (i, m)."""

    __slots__ = ("kappa", "lam", "_split")

    def __init__(self, kappa: Union[Scalar, int], lam: Union[Scalar, int]):
        kappa = coerce_scalar(kappa)
        lam = coerce_scalar(lam)
        if kappa.is_zero() or lam.is_zero():
            raise ValueError("kappa and lam must be nonzero")
        self.kappa = kappa
        self.lam = lam
        self._split = (q_power(-1) - q_power(1)).inv()

    def act_generator(self, name: str, label) -> Vec:
        i, m = label
        if name == "K":
            return {label: q_power(-i) * self.kappa}
        if name == "Kinv":
            return {label: q_power(i) * self.kappa.inv()}
        if name == "Y":
            return {(i + 1, m): ONE}
        if name == "X":
            return {(i - 1, m): q_power(i + 2 * m) * self.lam}
        if name == "E":
            return {
                (i - 2, m + 1): q_power(-i) * self._split,
                (i - 2, m): -q_power(i + 2 * m) * self.lam * self._split,
            }
        raise ValueError(f"unknown generator {name!r}")

    def k_eigenvalue(self, i: int) -> Scalar:
        return q_power(-i) * self.kappa

    def window_labels(self, w: int) -> List[Tuple[int, int]]:
        return [(i, m) for i in range(-w, w + 1) for m in range(-w, w + 1)]

    def growth_series(self, n_max: int) -> List[int]:
        """dim F_n . e_00 for n = 0..n_max, computed by exact rank."""
        span = SpanBuilder()
        dims = []
        degree = -1
        # monomials share all but one generator with a lower one, so each
        # costs a single generator application on its parent's vector
        cache: dict = {(0, 0, 0, 0): {(0, 0): ONE}}

        def vec_for(m: Monomial) -> Vec:
            got = cache.get(m)
            if got is not None:
                return got
            i, a, b, c = m
            if i > 0:
                parent, gen = (i - 1, a, b, c), "K"
            elif i < 0:
                parent, gen = (i + 1, a, b, c), "Kinv"
            elif a:
                parent, gen = (0, a - 1, b, c), "X"
            elif b:
                parent, gen = (0, a, b - 1, c), "Y"
            else:
                parent, gen = (0, a, b, c - 1), "E"
            out = self._apply_generator(gen, vec_for(parent))
            cache[m] = out
            return out

        for m in filtration_monomials(n_max):
            d = monomial_degree(m)
            while degree < d:
                if degree >= 0:
                    dims.append(span.rank)
                degree += 1
            span.add(vec_for(m))
        dims.append(span.rank)
        return dims

    def module_growth(self, n: int) -> int:
        return self.growth_series(n)[-1]

    def cyclic_reach(self, label, n: int = 6) -> bool:
        """Can F_n applied to the basis vector at `label` hit e_00?"""
        columns = [
            (m, self.act_monomial(m, label)) for m in filtration_monomials(n)
        ]
        columns = [(m, v) for m, v in columns if v]
        return solve_in_span(columns, self.basis_vector((0, 0))) is not None


class CyclicQuotientModule(LabeledModule):
    """Left module of a factor algebra on powers of one basis generator.

    The factor map sends the five symbols into a q-commuting target; the
    module is spanned by beta^j (j in Z) for the chosen invertible
    generator beta, with every other generator g reduced to the scalar
    values[g] on the cyclic vector.  With no basis generator the module
    is one-dimensional and everything reduces to scalars.
    """

    __slots__ = ("qmap", "basis_gen", "values", "_pos")

    def __init__(
        self,
        qmap: QuotientMap,
        basis_gen: Optional[str],
        values: Optional[Dict[str, Union[Scalar, int]]] = None,
    ):
        values = {g: coerce_scalar(s) for g, s in (values or {}).items()}
        target = qmap.target
        names = target.names
        if basis_gen is not None:
            if basis_gen not in names:
                raise ValueError(f"{basis_gen} is not a target generator")
            if basis_gen not in target.invertible:
                raise ValueError(f"{basis_gen} must be invertible to index a basis")
        rest = [g for g in names if g != basis_gen]
        if set(values) != set(rest):
            raise ValueError(f"need scalar values exactly for {rest}")
        for g in rest:
            if g in target.invertible and values[g].is_zero():
                raise ValueError(f"value for invertible generator {g} must be nonzero")
        # the reduced generators must commute among themselves, or the
        # scalar character is inconsistent
        for gi, g in enumerate(rest):
            for h in rest[:gi]:
                if target.twist(g, h) and not (
                    values[g].is_zero() or values[h].is_zero()
                ):
                    raise ValueError(
                        f"{g} and {h} q-commute nontrivially; their values "
                        "cannot both be nonzero"
                    )
        self.qmap = qmap
        self.basis_gen = basis_gen
        self.values = values
        self._pos = None if basis_gen is None else names.index(basis_gen)

    def _reduce_monomial(self, w: Tuple[int, ...]) -> Optional[Tuple[int, Scalar]]:
        """(label, coefficient) for the action of target monomial w on
        the cyclic vector; None if a zero value is raised to a negative
        power (cannot happen for well-formed targets)."""
        target = self.qmap.target
        names = target.names
        pos = self._pos
        label = 0
        coeff = ONE
        if pos is not None and w[pos]:
            label = w[pos]
            beta_only = tuple(w[pos] if k == pos else 0 for k in range(len(w)))
            rest_only = tuple(0 if k == pos else w[k] for k in range(len(w)))
            # w = q^-crossing * beta^label o (reduced part) as operators
            coeff = coeff * q_power(-target.crossing(beta_only, rest_only))
        for k, g in enumerate(names):
            if k == pos or not w[k]:
                continue
            v = self.values[g]
            if v.is_zero():
                if w[k] < 0:
                    return None
                return (label, ZERO)
            coeff = coeff * v ** w[k]
        return (label, coeff)

    def act_generator(self, name: str, label) -> Vec:
        if name not in _GEN_ORDER:
            raise ValueError(f"unknown generator {name!r}")
        img = self.qmap.images[name]
        target = self.qmap.target
        out: Vec = {}
        if self._pos is None:
            beta_j = target.one()
        else:
            beta_j = target.element(
                {
                    tuple(
                        label if k == self._pos else 0
                        for k in range(len(target.names))
                    ): ONE
                }
            )
        for w, s in (img * beta_j).terms.items():
            reduced = self._reduce_monomial(w)
            if reduced is None:
                raise ValueError("negative power of a nilpotent value")
            tgt, c = reduced
            sc = s * c
            if sc.is_zero():
                continue
            cur = out.get(tgt)
            cur = sc if cur is None else cur + sc
            if cur.is_zero():
                out.pop(tgt, None)
            else:
                out[tgt] = cur
        return out

    def window_labels(self, w: int) -> List[int]:
        if self._pos is None:
            return [0]
        return list(range(-w, w + 1))


def point_module(kappa: Union[Scalar, int]) -> CyclicQuotientModule:
    """One-dimensional module where K acts by kappa and X, Y, E vanish."""
    from .presented import quotient

    return CyclicQuotientModule(quotient("L", kappa), None, {})


def k_line_module(lam: Union[Scalar, int]) -> CyclicQuotientModule:
    """Basis K^j; E acts by lam*q^-2j, X and Y act by zero."""
    from .presented import quotient

    return CyclicQuotientModule(quotient("A_mod_Y"), "K", {"E": lam})


def k_line_module_y(lam: Union[Scalar, int]) -> CyclicQuotientModule:
    """Basis K^j; Y acts by lam*q^j, X and E act by zero."""
    from .presented import quotient

    return CyclicQuotientModule(quotient("A_mod_E"), "K", {"Y": lam})


def zeta_module_q(zeta, kappa) -> CyclicQuotientModule:
    """Basis Y^j through the X-killing zeta-presentation; K reduces to kappa."""
    from .presented import quotient

    return CyclicQuotientModule(quotient("A_mod_X_q", zeta), "Y", {"K": kappa})


def zeta_module_r(zeta, kappa) -> CyclicQuotientModule:
    """Basis Y^j through the phi-killing zeta-presentation."""
    from .presented import quotient

    return CyclicQuotientModule(quotient("A_mod_phi_r", zeta), "Y", {"K": kappa})


# ------------------------------------------------------------------ orbits


class OrbitPoint:
    """Maximal ideal (H - root) of the polynomial base, sigma(H) = q*H."""

    __slots__ = ("root",)

    def __init__(self, root: Union[Scalar, int]):
        object.__setattr__(self, "root", coerce_scalar(root))

    def __setattr__(self, *_):
        raise AttributeError("OrbitPoint is immutable")

    @property
    def is_fixed(self) -> bool:
        return self.root.is_zero()

    def shift(self, j: int) -> "OrbitPoint":
        """sigma^j of the ideal: the root moves to q^-j * root."""
        return OrbitPoint(q_power(-j) * self.root)

    def __eq__(self, other):
        if not isinstance(other, OrbitPoint):
            return NotImplemented
        return self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f"<OrbitPoint H - {self.root.text()}>"


def same_orbit(p: OrbitPoint, r: OrbitPoint) -> Optional[int]:
    """The j with r = sigma^j(p), or None.

    The fixed point 0 is its own singleton orbit; two nonzero roots lie
    on one orbit exactly when their ratio is a pure power of q.
    """
    if p.is_fixed or r.is_fixed:
        return 0 if p.is_fixed and r.is_fixed else None
    k = (r.root / p.root).as_q_power()
    return None if k is None else -k


def l_normal(bottom: Sequence[OrbitPoint], top: Sequence[OrbitPoint]) -> bool:
    """Sign test on the orbit exponents from bottom roots to top roots.

    For every bottom root rho_m and top root rho_n lying on a common
    infinite orbit, the j with (H - rho_n) = sigma^j((H - rho_m)) must be
    negative.  Fixed roots and disjoint orbits impose nothing.
    """
    for rm in bottom:
        if rm.is_fixed:
            continue
        for rn in top:
            if rn.is_fixed:
                continue
            j = same_orbit(rm, rn)
            if j is not None and j >= 0:
                return False
    return True


def l_normal_oracle(
    bottom: Sequence[OrbitPoint], top: Sequence[OrbitPoint], span: int = 20
) -> bool:
    """Brute-force variant: scan |j| <= span for ideal matches."""
    for rm in bottom:
        if rm.is_fixed:
            continue
        for rn in top:
            if rn.is_fixed:
                continue
            for j in range(-span, span + 1):
                if rm.shift(j) == rn and j >= 0:
                    return False
    return True
