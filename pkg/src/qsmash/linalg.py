"""Exact sparse linear algebra over Q(q).

Vectors are dicts mapping hashable keys to nonzero Scalars.  Everything
here is plain incremental Gaussian elimination with the first key (in
sorted order) of each reduced vector as pivot; no pivoting heuristics are
needed at the sizes this package reaches, and exactness makes stability a
non-issue.
"""

from __future__ import annotations

from typing import Dict, Hashable, List, Optional, Tuple

from .scalars import Scalar, ONE

Vec = Dict[Hashable, Scalar]


def vec_is_zero(v: Vec) -> bool:
    return not v


def vec_axpy(target: Vec, coeff: Scalar, source: Vec) -> None:
    """target += coeff * source, pruning zeros in place."""
    for k, s in source.items():
        c = target.get(k)
        c = coeff * s if c is None else c + coeff * s
        if c.is_zero():
            target.pop(k, None)
        else:
            target[k] = c


class SpanBuilder:
    """Row space accumulator: rank queries and exact membership tests.

    Reduced rows are kept monic on their pivot key; keys must be mutually
    comparable (tuples of ints throughout this package).
    """

    def __init__(self):
        self.pivots: Dict[Hashable, Vec] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, v: Vec) -> Vec:
        v = dict(v)
        while v:
            head = min(v)
            row = self.pivots.get(head)
            if row is None:
                return v
            vec_axpy(v, -v[head], row)
        return v

    def add(self, v: Vec) -> bool:
        """Insert v; True when it enlarges the span."""
        r = self._reduce(v)
        if not r:
            return False
        head = min(r)
        inv = r[head].inv()
        self.pivots[head] = {k: inv * c for k, c in r.items()}
        return True

    def contains(self, v: Vec) -> bool:
        return not self._reduce(v)


def kernel_basis(columns: List[Tuple[Hashable, Vec]]) -> List[Vec]:
    """Nullspace of the linear map sending unit vector e_c to the given
    column vector, for columns [(label, vector), ...].

    Returns combination dicts {column label: Scalar} spanning the kernel,
    one per dependent column, in input order.
    """

    pivots: Dict[Hashable, Tuple[Vec, Vec]] = {}
    out: List[Vec] = []
    for label, vec in columns:
        v = dict(vec)
        comb: Vec = {label: ONE}
        while v:
            head = min(v)
            hit = pivots.get(head)
            if hit is None:
                break
            row, rcomb = hit
            c = -v[head]
            vec_axpy(v, c, row)
            vec_axpy(comb, c, rcomb)
        if not v:
            out.append(comb)
        else:
            head = min(v)
            inv = v[head].inv()
            pivots[head] = (
                {k: inv * c for k, c in v.items()},
                {k: inv * c for k, c in comb.items()},
            )
    return out


def solve_in_span(columns: List[Tuple[Hashable, Vec]], target: Vec) -> Optional[Vec]:
    """Exact solution {label: coeff} of sum(coeff * column) = target, or None."""

    pivots: Dict[Hashable, Tuple[Vec, Vec]] = {}
    for label, vec in columns:
        v = dict(vec)
        comb: Vec = {label: ONE}
        while v:
            head = min(v)
            hit = pivots.get(head)
            if hit is None:
                break
            row, rcomb = hit
            c = -v[head]
            vec_axpy(v, c, row)
            vec_axpy(comb, c, rcomb)
        if v:
            head = min(v)
            inv = v[head].inv()
            pivots[head] = (
                {k: inv * c for k, c in v.items()},
                {k: inv * c for k, c in comb.items()},
            )
    t = dict(target)
    answer: Vec = {}
    while t:
        head = min(t)
        hit = pivots.get(head)
        if hit is None:
            return None
        row, rcomb = hit
        c = t[head]
        vec_axpy(t, -c, row)
        vec_axpy(answer, c, rcomb)
    return answer
