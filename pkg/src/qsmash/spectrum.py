"""The prime spectrum: nine ideals, their inclusions, and certificates.

Every prime of the algebra is one of

    0, (X), (phi), (X,Y), (X,E), (X,Y,E),
    P(kappa) = (X, Y, E, K - kappa)          kappa nonzero
    Q(zeta)  = (X, phi*Y*K^-1 - zeta)        zeta nonzero
    R(zeta)  = (phi, X*Y*K - zeta)           zeta nonzero

and all are completely prime.  Membership is decided exactly by pushing
an element through the factor map with the matching kernel; inclusion of
ideals reduces to membership of generators.  The three parametric
families collapse to one node each in the inclusion diagram, which this
module renders as a boolean matrix, a covering-edge list, DOT text, and
a JSON-friendly adjacency structure.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import (
    AlgebraElement,
    E,
    K,
    X,
    Y,
    c_element,
    filtration_monomials,
    monomial,
    one,
    phi,
    z_element,
)
from .linalg import solve_in_span
from .presented import QuotientMap, quotient
from .scalars import Scalar, coerce_scalar

KINDS: Tuple[str, ...] = ("zero", "X", "phi", "Y", "E", "YE", "P", "Q", "R")
FAMILIES: Tuple[str, ...] = ("P", "Q", "R")

_LABELS = {
    "zero": "0",
    "X": "(X)",
    "phi": "(phi)",
    "Y": "(X, Y)",
    "E": "(X, E)",
    "YE": "(X, Y, E)",
}

_PRESET_FOR_KIND = {
    "X": "A_mod_X",
    "phi": "A_mod_phi",
    "Y": "A_mod_Y",
    "E": "A_mod_E",
    "YE": "A_mod_YE",
    "P": "L",
    "Q": "A_mod_X_q",
    "R": "A_mod_phi_r",
}


class PrimeIdeal:
    """One of the nine primes, with its parameter when in a family."""

    __slots__ = ("kind", "param", "_map")

    def __init__(self, kind: str, param: Optional[Union[Scalar, int]] = None):
        if kind not in KINDS:
            raise ValueError(f"unknown prime kind {kind!r}")
        if kind in FAMILIES:
            if param is None:
                raise ValueError(f"{kind} is a family and needs a nonzero parameter")
            param = coerce_scalar(param)
            if param.is_zero():
                raise ValueError(f"{kind} needs a nonzero parameter")
        elif param is not None:
            raise ValueError(f"{kind} takes no parameter")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "param", param)
        object.__setattr__(self, "_map", None)

    def __setattr__(self, *_):
        raise AttributeError("PrimeIdeal is immutable")

    def label(self) -> str:
        if self.kind in _LABELS:
            return _LABELS[self.kind]
        return f"{self.kind}({self.param.text()})"

    def generators(self) -> List[AlgebraElement]:
        if self.kind == "zero":
            return []
        if self.kind == "X":
            return [X]
        if self.kind == "phi":
            return [phi()]
        if self.kind == "Y":
            return [X, Y]
        if self.kind == "E":
            return [X, E]
        if self.kind == "YE":
            return [X, Y, E]
        if self.kind == "P":
            return [X, Y, E, K - one().scale(self.param)]
        if self.kind == "Q":
            return [X, z_element() - one().scale(self.param)]
        return [phi(), c_element() - one().scale(self.param)]

    def quotient_map(self) -> Optional[QuotientMap]:
        """The factor map whose kernel is this ideal (None for 0)."""
        if self.kind == "zero":
            return None
        if self._map is None:
            preset = _PRESET_FOR_KIND[self.kind]
            param = self.param if self.kind in FAMILIES else None
            object.__setattr__(self, "_map", quotient(preset, param))
        return self._map

    def contains(self, el: AlgebraElement) -> bool:
        """Exact membership via the factor map."""
        if self.kind == "zero":
            return el.is_zero()
        return self.quotient_map().project(el).is_zero()

    @property
    def is_maximal(self) -> bool:
        return self.kind in FAMILIES

    @property
    def is_primitive(self) -> bool:
        return self.kind in FAMILIES or self.kind in ("Y", "E", "zero")

    @property
    def is_completely_prime(self) -> bool:
        return True

    def classify(self) -> dict:
        return {
            "kind": self.kind,
            "label": self.label(),
            "param": None if self.param is None else self.param.text(),
            "maximal": self.is_maximal,
            "primitive": self.is_primitive,
            "completely_prime": self.is_completely_prime,
            "height": NODE_HEIGHTS[_node_of_kind(self.kind)],
        }

    def __eq__(self, other):
        if not isinstance(other, PrimeIdeal):
            return NotImplemented
        return self.kind == other.kind and self.param == other.param

    def __hash__(self):
        return hash((self.kind, self.param))

    def __repr__(self):
        return f"<PrimeIdeal {self.label()}>"


def ideal(kind: str, param=None) -> PrimeIdeal:
    return PrimeIdeal(kind, param)


def leq(p: PrimeIdeal, r: PrimeIdeal) -> bool:
    """Inclusion p <= r, decided generator by generator."""
    return all(r.contains(g) for g in p.generators())


# ----------------------------------------------------------------- poset

NODES: Tuple[str, ...] = (
    "zero",
    "X",
    "phi",
    "Y",
    "E",
    "YE",
    "P_family",
    "Q_family",
    "R_family",
)

NODE_LABELS: Dict[str, str] = {
    "zero": "0",
    "X": "(X)",
    "phi": "(phi)",
    "Y": "(X, Y)",
    "E": "(X, E)",
    "YE": "(X, Y, E)",
    "P_family": "P(kappa)",
    "Q_family": "Q(zeta)",
    "R_family": "R(zeta)",
}


def _node_of_kind(kind: str) -> str:
    return f"{kind}_family" if kind in FAMILIES else kind


def representative(node: str) -> PrimeIdeal:
    """A concrete prime for the node; families take parameter 1.

    Inclusions between distinct families are empty for every parameter
    choice, so one representative decides the whole family diagram.
    """
    if node.endswith("_family"):
        return PrimeIdeal(node[: -len("_family")], 1)
    return PrimeIdeal(node)


def leq_matrix() -> List[List[bool]]:
    reps = [representative(n) for n in NODES]
    return [[leq(p, r) for r in reps] for p in reps]


def hasse_edges() -> List[Tuple[str, str]]:
    """Covering relations: the transitive reduction of the inclusion order."""
    m = leq_matrix()
    n = len(NODES)
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not m[i][j]:
                continue
            if any(k not in (i, j) and m[i][k] and m[k][j] for k in range(n)):
                continue
            edges.append((NODES[i], NODES[j]))
    order = {name: pos for pos, name in enumerate(NODES)}
    edges.sort(key=lambda e: (order[e[0]], order[e[1]]))
    return edges


def _heights() -> Dict[str, int]:
    m = leq_matrix()
    idx = {n: i for i, n in enumerate(NODES)}
    height: Dict[str, int] = {}

    def h(node: str) -> int:
        if node not in height:
            below = [
                h(other)
                for other in NODES
                if other != node and m[idx[other]][idx[node]]
            ]
            height[node] = 1 + max(below) if below else 0
        return height[node]

    for node in NODES:
        h(node)
    return height


NODE_HEIGHTS: Dict[str, int] = {
    "zero": 0,
    "X": 1,
    "phi": 1,
    "Y": 2,
    "E": 2,
    "YE": 3,
    "P_family": 4,
    "Q_family": 2,
    "R_family": 2,
}


def to_dot() -> str:
    """Deterministic DOT rendering of the inclusion diagram."""
    lines = ["digraph spectrum {", "  rankdir=BT;", "  node [shape=box];"]
    for node in NODES:
        lines.append(f'  {node} [label="{NODE_LABELS[node]}"];')
    for lo, hi in hasse_edges():
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjacency() -> dict:
    return {
        "nodes": list(NODES),
        "edges": [list(e) for e in hasse_edges()],
    }


# ----------------------------------------------------- bounded membership


def member_bounded(p: PrimeIdeal, el: AlgebraElement, n: int) -> bool:
    """Constructive membership: search for el = sum m1*g*m2 with each
    summand of filtration degree <= n.

    False means only that no certificate exists at this bound; `contains`
    remains the exact test.  Complements it with an explicit witness.
    """
    if p.kind == "zero":
        return el.is_zero()
    if el.is_zero():
        return True
    columns = []
    mons = list(filtration_monomials(n))
    for gi, g in enumerate(p.generators()):
        gd = g.degree()
        if gd > n:
            continue
        for m1 in mons:
            d1 = abs(m1[0]) + m1[1] + m1[2] + m1[3]
            if d1 + gd > n:
                continue
            left = AlgebraElement({m1: coerce_scalar(1)}) * g
            for m2 in mons:
                d2 = abs(m2[0]) + m2[1] + m2[2] + m2[3]
                if d1 + gd + d2 > n:
                    continue
                prod = left * AlgebraElement({m2: coerce_scalar(1)})
                if prod.terms:
                    columns.append(((gi, m1, m2), prod.terms))
    return solve_in_span(columns, el.terms) is not None
