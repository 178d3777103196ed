"""Executable verification suites.

Every suite re-derives a family of structural facts about the algebra
and reports one :class:`CheckResult` row per fact.  Nothing here raises
on a failed law; callers get the full report and decide what to do with
it.  All comparisons are exact symbolic equalities except the two
growth fits, which return the integer degree of an exact polynomial
fit.

The randomized suites take a seed so reports are reproducible; bumping
the sample counts is always safe.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, Iterable, List, NamedTuple, Sequence, Tuple

from . import linalg
from .algebra import (
    E,
    GENERATORS,
    K,
    Kinv,
    X,
    Y,
    c_element,
    centralizer_basis,
    defining_relations,
    filtration_dim,
    growth_exponent,
    monomial,
    normality_witness,
    one,
    phi,
    smash_consistency_check,
    z_element,
)
from .automorphisms import random_automorphism
from .gwa import e_sigma, e_structure, iso_check, random_gwa_element, solve_alpha
from .modules import (
    OrbitPoint,
    WeightModule,
    k_line_module,
    k_line_module_y,
    l_normal,
    l_normal_oracle,
    point_module,
    zeta_module_q,
    zeta_module_r,
)
from .presented import PARAMETRIC_PRESETS, PRESETS, quotient
from .scalars import ONE, Q, Scalar, q_power
from .spectrum import (
    FAMILIES,
    NODES,
    PrimeIdeal,
    hasse_edges,
    ideal,
    leq_matrix,
    representative,
    to_dot,
)

__all__ = [
    "CheckResult",
    "SUITE_NAMES",
    "run_suite",
    "all_passed",
    "check_identities",
    "check_quotients",
    "check_spectrum",
    "check_automorphisms",
    "check_gwa",
    "check_weight_modules",
    "check_unfaithful_modules",
    "check_l_normal",
    "check_centers",
    "check_growth",
]


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _row(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, passed, detail)


def _fail_list(failures: List[str], ok_detail: str) -> Tuple[bool, str]:
    if failures:
        return False, "failed: " + "; ".join(failures)
    return True, ok_detail


# ---------------------------------------------------------------- identities


def check_identities() -> List[CheckResult]:
    """Exact PBW identities among the generators and phi."""
    out: List[CheckResult] = []

    bad = [name for name, el in defining_relations() if not el.is_zero()]
    ok, detail = _fail_list(bad, "all six normalize to zero")
    out.append(_row("defining relations", ok, detail))

    bad = [f"row {name}" for name, okay, _ in smash_consistency_check() if not okay]
    ok, detail = _fail_list(bad, "cross relations re-derived from the Hopf action")
    out.append(_row("smash-product consistency", ok, detail))

    # E^i*Y = q^-i*Y*E^i + q^(1-i)*(1-q^2i)/(1-q^2) * X*E^(i-1)
    split = lambda i: (q_power(1 - i) * (ONE - q_power(2 * i))) / (ONE - q_power(2))
    bad = []
    for i in range(1, 9):
        lhs = E**i * Y
        rhs = (Y * E**i).scale(q_power(-i)) + (X * E ** (i - 1)).scale(split(i))
        if lhs != rhs:
            bad.append(f"i={i}")
    ok, detail = _fail_list(bad, "exact for i = 1..8")
    out.append(_row("E^i*Y straightening", ok, detail))

    # E*Y^i = (q^-2i - 1)/(q^-2 - 1) * X*Y^(i-1) + q^-i * Y^i*E
    bad = []
    for i in range(1, 9):
        coeff = (q_power(-2 * i) - ONE) / (q_power(-2) - ONE)
        lhs = E * Y**i
        rhs = (X * Y ** (i - 1)).scale(coeff) + (Y**i * E).scale(q_power(-i))
        if lhs != rhs:
            bad.append(f"i={i}")
    ok, detail = _fail_list(bad, "exact for i = 1..8")
    out.append(_row("E*Y^i straightening", ok, detail))

    both = phi() == (E * Y).scale(ONE - Q**2) + X.scale(Q**2)
    out.append(
        _row(
            "phi has both presentations",
            both,
            "X + (q^-1 - q)*Y*E equals (1 - q^2)*E*Y + q^2*X",
        )
    )

    # E*Y = (q^-1*phi - q*X) / (q^-1 - q)
    split_scalar = (q_power(-1) - Q).inv()
    ey = (phi().scale(q_power(-1)) - X.scale(Q)).scale(split_scalar)
    out.append(_row("E*Y through phi", E * Y == ey, "the weight-raising decomposition"))

    eyy = (Y * phi()).scale((Q * (ONE - Q**2)).inv()) + (Y * X).scale(Q**3 / (Q**2 - ONE))
    out.append(_row("E*Y^2 through phi", E * Y * Y == eyy, "used by the K-centralizer"))

    witness = normality_witness(phi())
    expected = {"X": ONE, "Y": Q, "E": q_power(-1), "K": Q, "Kinv": q_power(-1)}
    common = witness is not None and all(witness.get(g) == expected[g] for g in expected if g in witness)
    out.append(
        _row(
            "phi is normal with q-commutation table",
            witness is not None and common,
            f"g*phi = s_g*phi*g with s = {{X:1, Y:q, E:q^-1, K:q}}; got {witness}",
        )
    )

    # image of the central lift agrees with (1 - q^2)*E*Y^2*K^-1 mod X
    mod_x = quotient("A_mod_X")
    alt = (E * Y * Y * Kinv).scale(ONE - Q**2)
    out.append(
        _row(
            "z-element congruence modulo X",
            mod_x.project(z_element() - alt).is_zero(),
            "phi*Y*K^-1 = (1 - q^2)*E*Y^2*K^-1 modulo X",
        )
    )
    return out


# ------------------------------------------------------------- factor maps


def check_quotients() -> List[CheckResult]:
    """All quotient presets define algebra maps (relations map to zero)."""
    out: List[CheckResult] = []
    for name in PRESETS:
        param = Q if name in PARAMETRIC_PRESETS else None
        qmap = quotient(name, param)
        bad = [rel for rel, okay in qmap.check_well_defined() if not okay]
        ok, detail = _fail_list(bad, "six relations and both K-inverses hold")
        out.append(_row(f"quotient map {name}", ok, detail))
    return out


# ---------------------------------------------------------------- spectrum


def _closure_from_edges(edges: Sequence[Tuple[str, str]]) -> List[List[bool]]:
    index = {node: k for k, node in enumerate(NODES)}
    n = len(NODES)
    reach = [[i == j for j in range(n)] for i in range(n)]
    for low, high in edges:
        reach[index[low]][index[high]] = True
    for mid in range(n):
        for i in range(n):
            if reach[i][mid]:
                row = reach[i]
                mrow = reach[mid]
                for j in range(n):
                    if mrow[j]:
                        row[j] = True
    return reach


def check_spectrum() -> List[CheckResult]:
    out: List[CheckResult] = []

    matrix = leq_matrix()
    closure = _closure_from_edges(hasse_edges())
    out.append(
        _row(
            "inclusion order matches the diagram closure",
            matrix == closure,
            "9x9 leq matrix equals reflexive-transitive closure of the 11 edges",
        )
    )

    cases = [
        ("Y", X, True),
        ("E", X, True),
        ("E", phi(), True),
        ("phi", X, False),
        ("X", phi(), False),
    ]
    bad = []
    for kind, element, expected in cases:
        if ideal(kind).contains(element) is not expected:
            bad.append(f"({kind}) contains {element.to_text()} != {expected}")
    ok, detail = _fail_list(bad, "five membership witnesses")
    out.append(_row("ideal membership", ok, detail))

    bad = []
    for node in NODES:
        p = representative(node)
        info = p.classify()
        family = p.kind in FAMILIES
        if info["maximal"] is not family:
            bad.append(f"{node} maximal flag")
        if info["primitive"] is not (family or p.kind in ("Y", "E", "zero")):
            bad.append(f"{node} primitive flag")
        if not info["completely_prime"]:
            bad.append(f"{node} completely prime flag")
    ok, detail = _fail_list(bad, "maximal = families; primitive adds (X,Y), (X,E), 0")
    out.append(_row("classification flags", ok, detail))

    index = {node: k for k, node in enumerate(NODES)}
    heights = {}
    for node in NODES:  # longest descending chain inside the matrix order
        heights[node] = 0
    changed = True
    while changed:
        changed = False
        for hi in NODES:
            for lo in NODES:
                if lo != hi and leq_matrix()[index[lo]][index[hi]]:
                    if heights[lo] + 1 > heights[hi]:
                        heights[hi] = heights[lo] + 1
                        changed = True
    bad = [
        node
        for node in NODES
        if representative(node).classify()["height"] != heights[node]
    ]
    ok, detail = _fail_list(bad, "heights recomputed from the order agree")
    out.append(_row("heights", ok, detail))

    text = to_dot()
    deterministic = text == to_dot() and text.count(" -> ") == len(hasse_edges())
    out.append(_row("DOT output deterministic", deterministic, f"{len(text)} bytes"))
    return out


# ----------------------------------------------------------- automorphisms


def check_automorphisms(samples: int = 25, seed: int = 20260412) -> List[CheckResult]:
    rng = random.Random(seed)
    auts = [random_automorphism(rng) for _ in range(samples)]
    partners = [random_automorphism(rng) for _ in range(samples)]

    bad = [a.literal() for a in auts if not all(ok for _, ok in a.check_relations())]
    ok, detail = _fail_list(bad, f"{samples} random parameter tuples, twist |i| <= 5")
    out = [_row("relations preserved", ok, detail)]

    bad = []
    for a, b in zip(auts, partners):
        composed = a.compose(b)
        for gen in GENERATORS.values():
            if composed.apply(gen) != a.apply(b.apply(gen)):
                bad.append(f"{a.literal()} o {b.literal()}")
                break
    ok, detail = _fail_list(bad, "closed-form product equals pointwise composition")
    out.append(_row("composition law", ok, detail))

    bad = []
    for a in auts:
        inv = a.inverse()
        if not (a.compose(inv).is_identity() and inv.compose(a).is_identity()):
            bad.append(a.literal())
            continue
        if any(a.apply(inv.apply(g)) != g for g in GENERATORS.values()):
            bad.append(a.literal())
    ok, detail = _fail_list(bad, "two-sided inverses, checked pointwise")
    out.append(_row("inverse law", ok, detail))

    fixed_kinds = ("zero", "X", "phi", "Y", "E", "YE")
    bad = []
    for a in auts:
        for kind in fixed_kinds:
            if a.act_on_prime(ideal(kind)) != ideal(kind):
                bad.append(f"{a.literal()} moves ({kind})")
    ok, detail = _fail_list(bad, "the six parameter-free primes are fixed")
    out.append(_row("fixed ideals", ok, detail))
    return out


# -------------------------------------------------------------------- GWA


def check_gwa(seed: int = 20260413, triples: int = 100, pairs: int = 200) -> List[CheckResult]:
    rng = random.Random(seed)
    data = e_structure()
    out: List[CheckResult] = []

    bad = 0
    for _ in range(triples):
        x = random_gwa_element(data, rng)
        y = random_gwa_element(data, rng)
        z = random_gwa_element(data, rng)
        if (x * y) * z != x * (y * z):
            bad += 1
    out.append(
        _row(
            "product associativity",
            bad == 0,
            f"{triples} random triples" if bad == 0 else f"{bad} failing triples",
        )
    )

    bad_pairs = []
    for n in range(-4, 5):
        for m in range(-4, 5):
            if data.bracket(n, m) != data.sigma_power(-n - m).apply(data.coeff(n, m)):
                bad_pairs.append(f"({n},{m})")
    ok, detail = _fail_list(bad_pairs, "bracket = sigma^(-n-m) of the structure coefficient, |n|,|m| <= 4")
    out.append(_row("structure coefficients", ok, detail))

    ok, checked = iso_check(rng, pairs=pairs)
    out.append(
        _row(
            "embedding into the PBW algebra",
            ok and checked >= pairs,
            f"products compared on {checked} random pairs",
        )
    )

    base = data.base
    alpha = solve_alpha(e_sigma(), base.gen("X"), q_power(-1))
    expected = base.gen("X").scale((q_power(-1) - Q).inv())
    out.append(
        _row(
            "skew extension constant",
            alpha == expected,
            "alpha = X/(q^-1 - q) from rho*alpha - sigma(alpha) = X",
        )
    )
    return out


# ---------------------------------------------------------------- modules


def check_weight_modules(
    samples: Sequence[Tuple[Scalar, Scalar]] = (
        (Scalar(2), Scalar(3)),
        (Q, q_power(-1)),
        (Q**2 - ONE, Scalar(5)),
    ),
) -> List[CheckResult]:
    out: List[CheckResult] = []
    for kappa, lam in samples:
        mod = WeightModule(kappa, lam)
        tag = f"kappa={kappa.text()}, lam={lam.text()}"

        bad = [name for name, okay in mod.check_axioms(mod.window_labels(4)) if not okay]
        ok, detail = _fail_list(bad, "all relations on the 9x9 label window")
        out.append(_row(f"module axioms [{tag}]", ok, detail))

        eigen = [mod.k_eigenvalue(i) for i in range(-4, 5)]
        distinct = len({s.text() for s in eigen}) == len(eigen)
        out.append(_row(f"distinct K-eigenvalues [{tag}]", distinct, "q^-i*kappa over i = -4..4"))

        bad = []
        for label in mod.window_labels(2):
            vec = mod.basis_vector(label)
            if not mod.act(X, vec) or not mod.act(phi(), vec):
                bad.append(str(label))
        ok, detail = _fail_list(bad, "X and phi are injective on basis labels")
        out.append(_row(f"zero kernels [{tag}]", ok, detail))

    mod = WeightModule(*samples[0])
    dims = mod.growth_series(14)
    fit = growth_exponent(range(6, 15), dims[6:15])
    out.append(
        _row(
            "cyclic growth exponent",
            abs(fit - 2.0) <= 0.3,
            f"fit {fit} over degrees 6..14 (square growth)",
        )
    )
    return out


def check_unfaithful_modules() -> List[CheckResult]:
    out: List[CheckResult] = []
    kappa, lam, zeta = Scalar(2), Q**2, Q

    mod = point_module(kappa)
    vec = mod.basis_vector(0)
    point_ok = (
        mod.act(K, vec) == {0: kappa}
        and mod.act(Kinv, vec) == {0: kappa.inv()}
        and not mod.act(X, vec)
        and not mod.act(Y, vec)
        and not mod.act(E, vec)
    )
    p_ideal = ideal("P", kappa)
    ann_ok = all(p_ideal.contains(el) for el in mod.annihilator_window(2, [0]))
    out.append(
        _row(
            "one-dimensional module at K=kappa",
            point_ok and ann_ok,
            "X, Y, E vanish; annihilator window sits in the maximal ideal",
        )
    )

    mod = k_line_module(lam)
    labels = mod.window_labels(2)
    kills_y = all(not mod.act(Y, mod.basis_vector(j)) for j in labels)
    kills_x = all(not mod.act(X, mod.basis_vector(j)) for j in labels)
    e_eigen = mod.act(E, mod.basis_vector(0)) == {0: lam} and not lam.is_zero()
    out.append(
        _row(
            "E-eigenline over the K-line",
            kills_y and kills_x and e_eigen,
            "Y and X vanish, E fixes the cyclic vector with eigenvalue lam != 0",
        )
    )

    mod = k_line_module_y(lam)
    kills_e = all(not mod.act(E, mod.basis_vector(j)) for j in labels)
    kills_x = all(not mod.act(X, mod.basis_vector(j)) for j in labels)
    y_eigen = mod.act(Y, mod.basis_vector(0)) == {0: lam} and not lam.is_zero()
    out.append(
        _row(
            "Y-eigenline over the K-line",
            kills_e and kills_x and y_eigen,
            "E and X vanish, Y fixes the cyclic vector with eigenvalue lam != 0",
        )
    )

    mod = zeta_module_q(zeta, kappa)
    bad = [name for name, okay in mod.check_axioms(mod.window_labels(2)) if not okay]
    z_el = z_element()
    z_scalar = all(
        mod.act(z_el, mod.basis_vector(j)) == {j: zeta} for j in mod.window_labels(1)
    )
    ok, detail = _fail_list(bad, "relations hold; the central element acts by zeta")
    out.append(_row("down-shift module on the Z fiber", ok and z_scalar, detail))

    mod = zeta_module_r(zeta, kappa)
    bad = [name for name, okay in mod.check_axioms(mod.window_labels(2)) if not okay]
    c_el = c_element()
    c_scalar = all(
        mod.act(c_el, mod.basis_vector(j)) == {j: zeta} for j in mod.window_labels(1)
    )
    phi_kills = all(not mod.act(phi(), mod.basis_vector(j)) for j in mod.window_labels(1))
    ok, detail = _fail_list(bad, "relations hold; phi vanishes; the central element acts by zeta")
    out.append(_row("down-shift module on the C fiber", ok and c_scalar and phi_kills, detail))
    return out


_ROOT_CONSTS = (Scalar(1), Scalar(2), Scalar(-1), Q**2 - ONE)


def _random_roots(rng: random.Random) -> List[OrbitPoint]:
    roots = []
    for _ in range(rng.randint(0, 3)):
        if rng.random() < 0.2:
            roots.append(OrbitPoint(Scalar(0)))
        else:
            const = rng.choice(_ROOT_CONSTS)
            roots.append(OrbitPoint(const * q_power(rng.randint(-8, 8))))
    return roots


def check_l_normal(samples: int = 50, seed: int = 20260414) -> List[CheckResult]:
    out: List[CheckResult] = []
    worked = [
        (([],), ([OrbitPoint(Scalar(0))],), True),
        (([OrbitPoint(Scalar(1))],), ([OrbitPoint(q_power(-1))],), False),
        (([OrbitPoint(q_power(-1))],), ([OrbitPoint(Scalar(1))],), True),
    ]
    bad = []
    for (bottom,), (top,), expected in worked:
        if l_normal(bottom, top) is not expected or l_normal_oracle(bottom, top) is not expected:
            bad.append(f"bottom={bottom} top={top}")
    ok, detail = _fail_list(bad, "constant, ascending, and descending root pairs")
    out.append(_row("worked examples", ok, detail))

    rng = random.Random(seed)
    bad_count = 0
    for _ in range(samples):
        bottom, top = _random_roots(rng), _random_roots(rng)
        if l_normal(bottom, top) is not l_normal_oracle(bottom, top):
            bad_count += 1
    out.append(
        _row(
            "agreement with the scanning oracle",
            bad_count == 0,
            f"{samples} random factored inputs, orbit window |j| <= 20",
        )
    )
    return out


# ---------------------------------------------------------------- centers


def check_centers() -> List[CheckResult]:
    out: List[CheckResult] = []

    central = centralizer_basis(GENERATORS.values(), 4)
    out.append(
        _row(
            "center of the full algebra in degree 4",
            len(central) == 1 and central[0].is_scalar(),
            "only the scalars commute with every generator",
        )
    )

    k_central = centralizer_basis([K], 2)
    columns = [(idx, dict(el.terms)) for idx, el in enumerate(k_central)]
    target = dict((X * Y).terms)
    inside = linalg.solve_in_span(columns, target) is not None
    out.append(
        _row(
            "K-centralizer in degree 2",
            len(k_central) == 6 and inside,
            f"dimension {len(k_central)}; contains X*Y",
        )
    )

    mod_x = quotient("A_mod_X")
    basis = mod_x.target.center_basis(3)
    z_img = mod_x.project(z_element())
    z_in = any(not el.is_scalar() and _proportional(el, z_img) for el in basis)
    out.append(
        _row(
            "center of the quotient by X",
            len(basis) == 2 and z_in,
            "span{1, Z} in degree <= 3",
        )
    )

    mod_phi = quotient("A_mod_phi")
    basis = mod_phi.target.center_basis(3)
    c_img = mod_phi.project(c_element())
    c_in = any(not el.is_scalar() and _proportional(el, c_img) for el in basis)
    out.append(
        _row(
            "center of the quotient by phi",
            len(basis) == 2 and c_in,
            "span{1, C} in degree <= 3",
        )
    )

    basis = quotient("Ybb").target.center_basis(3)
    out.append(
        _row(
            "center of the K,Y Laurent quotient",
            len(basis) == 1 and basis[0].is_scalar(),
            "scalars only in degree <= 3",
        )
    )
    return out


def _proportional(a, b) -> bool:
    if a.support() != b.support():
        return False
    supp = a.support()
    if not supp:
        return True
    ratio = a.coeff(supp[0]) / b.coeff(supp[0])
    return all(a.coeff(u) == ratio * b.coeff(u) for u in supp)


# ----------------------------------------------------------------- growth


def check_growth() -> List[CheckResult]:
    ns = range(8, 17)
    fit = growth_exponent(ns, [filtration_dim(n) for n in ns])
    return [
        _row(
            "filtration growth exponent",
            abs(fit - 4.0) <= 0.3,
            f"fit {fit} over degrees 8..16 (quartic growth)",
        )
    ]


# ------------------------------------------------------------------ suites


_SUITES: Dict[str, Tuple[Callable[[], List[CheckResult]], ...]] = {
    "identities": (check_identities,),
    "spectrum": (check_quotients, check_spectrum),
    "aut": (check_automorphisms,),
    "gwa": (check_gwa,),
    "modules": (check_weight_modules, check_unfaithful_modules, check_l_normal),
    "centers": (check_centers,),
    "growth": (check_growth,),
}

SUITE_NAMES: Tuple[str, ...] = tuple(_SUITES) + ("all",)


def run_suite(name: str = "all") -> List[CheckResult]:
    """Run one named suite, or every suite for ``all``."""
    if name == "all":
        results: List[CheckResult] = []
        for suite in _SUITES:
            for check in _SUITES[suite]:
                results.extend(check())
        return results
    if name not in _SUITES:
        raise ValueError(f"unknown suite '{name}' (one of: {', '.join(SUITE_NAMES)})")
    results = []
    for check in _SUITES[name]:
        results.extend(check())
    return results


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)
