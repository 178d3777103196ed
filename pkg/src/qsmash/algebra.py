"""PBW normal forms and multiplication for the smash-product algebra.

Generators K (invertible), X, Y, E over Q(q); defining relations

    E*K = q^-2*K*E    X*K = q^-1*K*X    Y*K = q*K*Y
    E*X = q*X*E       Y*X = q^-1*X*Y    E*Y = X + q^-1*Y*E

Ordered monomials K^i X^a Y^b E^c (i in Z; a, b, c in N) form a basis;
every product is straightened back onto it.  The only inhomogeneous step
is moving E past Y, which follows the closed form

    E^c * Y = q^-c * Y * E^c  +  q^(1-c) * (1-q^2c)/(1-q^2) * X * E^(c-1),

so right-multiplying a normal monomial by one generator yields at most two
normal terms and products never blow up.  The degree |i|+a+b+c filters the
algebra; F_n denotes the span of monomials of degree at most n.

A separate word-rewriting engine reduces arbitrary generator words by
applying one local rule at a time under a pluggable strategy.  It is the
independent oracle for `mul` and the confluence witness.
"""

from __future__ import annotations

import functools
import math
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .linalg import SpanBuilder, kernel_basis
from .scalars import ONE, ZERO, Scalar, coerce_scalar, q_power

Monomial = Tuple[int, int, int, int]  # (i, a, b, c) for K^i X^a Y^b E^c

UNIT_MONOMIAL: Monomial = (0, 0, 0, 0)


def monomial_degree(m: Monomial) -> int:
    i, a, b, c = m
    return abs(i) + a + b + c


def monomial_weight(m: Monomial) -> int:
    """Exponent wt with K*m*K^-1 = q^wt * m (the K-grading)."""
    _, a, b, c = m
    return 2 * c + a - b


def _sort_key(m: Monomial):
    # ascending degree; within a degree K before X before Y before E,
    # higher powers first, so sums read like x^2 + x*y + y^2
    return (monomial_degree(m), tuple(-e for e in m))


@functools.lru_cache(maxsize=None)
def _y_split_coeff(c: int) -> Scalar:
    # q^(1-c) * (1 - q^2c) / (1 - q^2)
    one_minus_q2 = ONE - q_power(2)
    return q_power(1 - c) * (ONE - q_power(2 * c)) / one_minus_q2


@functools.lru_cache(maxsize=None)
def _mono_times_mono(m1: Monomial, m2: Monomial) -> Tuple[Tuple[Monomial, Scalar], ...]:
    i1, a1, b1, c1 = m1
    i2, a2, b2, c2 = m2
    # K^i2 moves left through X^a1 Y^b1 E^c1, then X^a2 through Y^b1 E^c1.
    scale = q_power(i2 * (b1 - a1 - 2 * c1) + a2 * (c1 - b1))
    acc: Dict[Monomial, Scalar] = {(i1 + i2, a1 + a2, b1, c1): scale}
    for _ in range(b2):
        nxt: Dict[Monomial, Scalar] = {}
        for (i, a, b, c), s in acc.items():
            _accumulate(nxt, (i, a, b + 1, c), s * q_power(-c))
            if c:
                _accumulate(nxt, (i, a + 1, b, c - 1), s * _y_split_coeff(c) * q_power(-b))
        acc = nxt
    if c2:
        acc = {(i, a, b, c + c2): s for (i, a, b, c), s in acc.items()}
    return tuple(acc.items())


def _accumulate(table: Dict[Monomial, Scalar], m: Monomial, s: Scalar) -> None:
    cur = table.get(m)
    cur = s if cur is None else cur + s
    if cur.is_zero():
        table.pop(m, None)
    else:
        table[m] = cur


ScalarLike = Union[Scalar, int]


class AlgebraElement:
    """Finite Q(q)-linear combination of PBW monomials; immutable by use."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, Scalar]] = None):
        clean: Dict[Monomial, Scalar] = {}
        if terms:
            for m, s in terms.items():
                s = coerce_scalar(s)
                if not s.is_zero():
                    clean[m] = s
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("AlgebraElement is immutable")

    # ---------------------------------------------------------- queries

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: Monomial) -> Scalar:
        return self.terms.get(m, ZERO)

    def support(self) -> List[Monomial]:
        return sorted(self.terms, key=_sort_key)

    def degree(self) -> int:
        """Filtration degree; -1 for the zero element."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def k_weight(self) -> Optional[int]:
        """The K-grading weight when homogeneous, else None."""
        weights = {monomial_weight(m) for m in self.terms}
        if len(weights) == 1:
            return weights.pop()
        return None

    def is_scalar(self) -> bool:
        return not self.terms or set(self.terms) == {UNIT_MONOMIAL}

    def scalar_value(self) -> Scalar:
        if not self.terms:
            return ZERO
        if set(self.terms) != {UNIT_MONOMIAL}:
            raise ValueError("not a scalar element")
        return self.terms[UNIT_MONOMIAL]

    # ------------------------------------------------------- arithmetic

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = dict(self.terms)
        for m, s in other.terms.items():
            _accumulate(out, m, s)
        return AlgebraElement(out)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = dict(self.terms)
        for m, s in other.terms.items():
            _accumulate(out, m, -s)
        return AlgebraElement(out)

    def __neg__(self):
        return AlgebraElement({m: -s for m, s in self.terms.items()})

    def scale(self, s: ScalarLike) -> "AlgebraElement":
        s = coerce_scalar(s)
        if s.is_zero():
            return AlgebraElement()
        return AlgebraElement({m: s * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            out: Dict[Monomial, Scalar] = {}
            for m1, s1 in self.terms.items():
                for m2, s2 in other.terms.items():
                    s12 = s1 * s2
                    for m, s in _mono_times_mono(m1, m2):
                        _accumulate(out, m, s12 * s)
            return AlgebraElement(out)
        try:
            return self.scale(coerce_scalar(other))
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(coerce_scalar(other))
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int) -> "AlgebraElement":
        if not isinstance(k, int):
            raise TypeError("exponents must be integers")
        if k < 0:
            return self.invert() ** (-k)
        out = one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def invert(self) -> "AlgebraElement":
        """Inverse, defined only for nonzero scalars and coefficient
        multiples of pure K-powers (the units of the algebra)."""
        if len(self.terms) != 1:
            raise ValueError("only scalar multiples of K-powers are invertible")
        (m, s), = self.terms.items()
        i, a, b, c = m
        if (a, b, c) != (0, 0, 0):
            raise ValueError("only scalar multiples of K-powers are invertible")
        return AlgebraElement({(-i, 0, 0, 0): s.inv()})

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # ---------------------------------------------------------- output

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        chunks: List[str] = []
        for m in self.support():
            s = self.terms[m]
            sign = s.leading_sign()
            mag = s if sign > 0 else -s
            mono = _monomial_text(m)
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

    def to_records(self) -> List[dict]:
        """Stable structured export: one record per monomial with the
        coefficient's integer polynomial arrays (constant term first)."""
        out = []
        for m in self.support():
            s = self.terms[m]
            i, a, b, c = m
            out.append(
                {
                    "i": i,
                    "a": a,
                    "b": b,
                    "c": c,
                    "numerator": list(s.num),
                    "denominator": list(s.den),
                }
            )
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<AlgebraElement {self.to_text()}>"


def _monomial_text(m: Monomial) -> str:
    i, a, b, c = m
    parts = []
    if i:
        parts.append("K" if i == 1 else f"K^{i}")
    if a:
        parts.append("X" if a == 1 else f"X^{a}")
    if b:
        parts.append("Y" if b == 1 else f"Y^{b}")
    if c:
        parts.append("E" if c == 1 else f"E^{c}")
    return "*".join(parts)


def _coeff_text(s: Scalar) -> str:
    t = s.text()
    depth = 0
    prev = ""
    for ch in t:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and prev != "^":
            return f"({t})"
        prev = ch
    return t


def monomial(i: int = 0, a: int = 0, b: int = 0, c: int = 0, coeff: ScalarLike = 1) -> AlgebraElement:
    if a < 0 or b < 0 or c < 0:
        raise ValueError("X, Y, E exponents must be natural numbers")
    return AlgebraElement({(i, a, b, c): coerce_scalar(coeff)})


def one() -> AlgebraElement:
    return AlgebraElement({UNIT_MONOMIAL: ONE})


def zero() -> AlgebraElement:
    return AlgebraElement()


K = monomial(i=1)
Kinv = monomial(i=-1)
X = monomial(a=1)
Y = monomial(b=1)
E = monomial(c=1)

GENERATORS: Dict[str, AlgebraElement] = {"K": K, "Kinv": Kinv, "X": X, "Y": Y, "E": E}


def phi() -> AlgebraElement:
    """The normal element phi = (q^-1 - q)*Y*E + X."""
    return X + (Y * E).scale(q_power(-1) - q_power(1))


def z_element() -> AlgebraElement:
    """phi*Y*K^-1; its image generates the center mod X."""
    return phi() * Y * Kinv


def c_element() -> AlgebraElement:
    """X*Y*K; its image generates the center mod phi."""
    return X * Y * K


# ----------------------------------------------------------------- words

WORD_SYMBOLS = ("K", "k", "X", "Y", "E")  # 'k' stands for K^-1
_SYMBOL_ORDER = {"K": 0, "k": 0, "X": 1, "Y": 2, "E": 3}

# adjacent-pair rules: (left, right) -> list of (scalar exponent of q, replacement)
_SWAP_RULES: Dict[Tuple[str, str], int] = {
    ("X", "K"): -1,
    ("X", "k"): 1,
    ("Y", "K"): 1,
    ("Y", "k"): -1,
    ("E", "K"): -2,
    ("E", "k"): 2,
    ("Y", "X"): -1,
    ("E", "X"): 1,
}


def _find_redexes(word: Tuple[str, ...]) -> List[int]:
    out = []
    for p in range(len(word) - 1):
        u, v = word[p], word[p + 1]
        if (u, v) in (("K", "k"), ("k", "K")):
            out.append(p)
        elif (u, v) in _SWAP_RULES or (u, v) == ("E", "Y"):
            out.append(p)
    return out


def _apply_rule(word: Tuple[str, ...], p: int) -> List[Tuple[Scalar, Tuple[str, ...]]]:
    u, v = word[p], word[p + 1]
    head, tail = word[:p], word[p + 2:]
    if (u, v) in (("K", "k"), ("k", "K")):
        return [(ONE, head + tail)]
    if (u, v) == ("E", "Y"):
        return [
            (ONE, head + ("X",) + tail),
            (q_power(-1), head + ("Y", "E") + tail),
        ]
    exp = _SWAP_RULES[(u, v)]
    return [(q_power(exp), head + (v, u) + tail)]


def straighten_word(
    word: Sequence[str],
    coeff: ScalarLike = 1,
    strategy: str = "leftmost",
    rng=None,
) -> AlgebraElement:
    """Reduce a generator word to PBW normal form one rule at a time.

    `strategy` picks which redex to contract: 'leftmost', 'rightmost', or
    'random' (requires rng).  All strategies reach the same normal form;
    the choice exists so tests can witness confluence.
    """
    for s in word:
        if s not in _SYMBOL_ORDER:
            raise ValueError(f"unknown generator symbol {s!r}")
    pending: Dict[Tuple[str, ...], Scalar] = {tuple(word): coerce_scalar(coeff)}
    done: Dict[Monomial, Scalar] = {}
    while pending:
        w, c = pending.popitem()
        redexes = _find_redexes(w)
        if not redexes:
            _accumulate(done, _word_to_monomial(w), c)
            continue
        if strategy == "leftmost":
            p = redexes[0]
        elif strategy == "rightmost":
            p = redexes[-1]
        elif strategy == "random":
            if rng is None:
                raise ValueError("strategy 'random' needs an rng")
            p = rng.choice(redexes)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        for s, w2 in _apply_rule(w, p):
            cur = pending.get(w2)
            cur = c * s if cur is None else cur + c * s
            if cur.is_zero():
                pending.pop(w2, None)
            else:
                pending[w2] = cur
    return AlgebraElement(done)


def _word_to_monomial(w: Tuple[str, ...]) -> Monomial:
    i = w.count("K") - w.count("k")
    return (i, w.count("X"), w.count("Y"), w.count("E"))


def monomial_to_word(m: Monomial) -> Tuple[str, ...]:
    i, a, b, c = m
    ks = ("K",) * i if i >= 0 else ("k",) * (-i)
    return ks + ("X",) * a + ("Y",) * b + ("E",) * c


# ------------------------------------------------------------- relations


def defining_relations() -> List[Tuple[str, AlgebraElement]]:
    """The six relation elements; each must normalize to zero."""
    q = q_power(1)
    qi = q_power(-1)
    return [
        ("E*K - q^-2*K*E", E * K - (K * E).scale(q_power(-2))),
        ("X*K - q^-1*K*X", X * K - (K * X).scale(qi)),
        ("Y*K - q*K*Y", Y * K - (K * Y).scale(q)),
        ("E*X - q*X*E", E * X - (X * E).scale(q)),
        ("Y*X - q^-1*X*Y", Y * X - (X * Y).scale(qi)),
        ("E*Y - X - q^-1*Y*E", E * Y - X - (Y * E).scale(qi)),
    ]


def smash_consistency_check() -> List[Tuple[str, bool, str]]:
    """Re-derive the cross relations from the Hopf data and compare.

    The plane generators X, Y carry the action K.X = q*X, K.Y = q^-1*Y,
    E.X = 0, E.Y = X, and the coproducts are K -> K(x)K, E -> E(x)1 + K(x)E.
    In the smash product h*a = sum (h_(1).a)*h_(2); the right-hand sides
    computed that way must agree with the rewriting engine.
    """
    action: Dict[Tuple[str, str], AlgebraElement] = {
        ("K", "X"): X.scale(q_power(1)),
        ("K", "Y"): Y.scale(q_power(-1)),
        ("E", "X"): zero(),
        ("E", "Y"): X,
    }
    coproduct: Dict[str, List[Tuple[str, Optional[str]]]] = {
        "K": [("K", "K")],
        "E": [("E", None), ("K", "E")],
    }
    report = []
    for h in ("K", "E"):
        for a in ("X", "Y"):
            derived = zero()
            for h1, h2 in coproduct[h]:
                part = action[(h1, a)]
                if h2 is not None:
                    part = part * GENERATORS[h2]
                derived = derived + part
            direct = GENERATORS[h] * GENERATORS[a]
            ok = derived == direct
            report.append((f"{h}*{a}", ok, derived.to_text()))
    return report


def normality_witness(x: AlgebraElement) -> Optional[Dict[str, Scalar]]:
    """Scalars s_g with g*x = s_g*x*g for each generator g, or None.

    A full table certifies that x generates the same left and right ideal
    (x is normal).  Witnesses are found by exact coefficient division.
    """
    if x.is_zero():
        raise ValueError("normality witness of zero is meaningless")
    out: Dict[str, Scalar] = {}
    for name in ("X", "Y", "E", "K"):
        g = GENERATORS[name]
        left = g * x
        right = x * g
        if set(left.terms) != set(right.terms):
            return None
        ratio: Optional[Scalar] = None
        for m, c in right.terms.items():
            r = left.terms[m] / c
            if ratio is None:
                ratio = r
            elif ratio != r:
                return None
        out[name] = ratio if ratio is not None else ONE
    return out


# ------------------------------------------------------------ filtration


def filtration_monomials(n: int) -> Iterator[Monomial]:
    """All monomials of degree <= n in graded-lexicographic order."""
    for d in range(n + 1):
        for i in range(-d, d + 1):
            rest = d - abs(i)
            for a in range(rest + 1):
                for b in range(rest - a + 1):
                    yield (i, a, b, rest - a - b)


def filtration_dim(n: int) -> int:
    """Number of monomials with |i| + a + b + c <= n."""
    total = math.comb(n + 3, 3)  # i = 0 stratum summed over degrees
    for i in range(1, n + 1):
        total += 2 * math.comb(n - i + 3, 3)
    return total


def centralizer_basis(gens: Iterable[AlgebraElement], n: int) -> List[AlgebraElement]:
    """Basis of {x of degree <= n : x*g = g*x for all g}, exactly."""
    gens = list(gens)
    columns = []
    for m in filtration_monomials(n):
        el = AlgebraElement({m: ONE})
        vec = {}
        for gi, g in enumerate(gens):
            comm = el * g - g * el
            for mm, s in comm.terms.items():
                vec[(gi, mm)] = s
        columns.append((m, vec))
    basis = []
    for comb in kernel_basis(columns):
        basis.append(AlgebraElement(dict(comb)))
    return basis


# ------------------------------------------------------- growth measures


def growth_exponent(ns: Sequence[int], dims: Sequence[int]) -> float:
    """Growth exponent of a dimension sequence on consecutive arguments.

    Fits the minimal-degree polynomial reproducing the window exactly
    (successive finite differences) and returns its degree; that is the
    right notion for filtered algebras whose dimension sequences are
    eventually polynomial, where a finite-window log-log slope would
    systematically undershoot.  When no polynomial fits inside the
    window, falls back to the least-squares slope of log dim vs log n.
    """
    ns = list(ns)
    dims = list(dims)
    if len(ns) != len(dims) or len(ns) < 3:
        raise ValueError("need at least three sample points")
    if any(b - a != 1 for a, b in zip(ns, ns[1:])):
        raise ValueError("sample points must be consecutive integers")
    seq = list(dims)
    degree = 0
    while len(seq) > 1:
        seq = [y - x for x, y in zip(seq, seq[1:])]
        if all(v == 0 for v in seq):
            return float(degree)
        degree += 1
    return log_log_slope(ns, dims)


def log_log_slope(ns: Sequence[int], dims: Sequence[int]) -> float:
    xs = [math.log(n) for n in ns]
    ys = [math.log(d) for d in dims]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


# ------------------------------------------------- random test elements


COEFF_POOL = (ONE, -ONE, q_power(1), q_power(-1), q_power(2) - ONE)


def random_monomial(rng) -> Monomial:
    return (
        rng.randint(-2, 2),
        rng.randint(0, 2),
        rng.randint(0, 2),
        rng.randint(0, 2),
    )


def random_element(rng, max_terms: int = 3) -> AlgebraElement:
    terms: Dict[Monomial, Scalar] = {}
    for _ in range(rng.randint(1, max_terms)):
        _accumulate(terms, random_monomial(rng), rng.choice(COEFF_POOL))
    return AlgebraElement(terms)
