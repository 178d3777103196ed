"""Factor algebras: q-commuting arithmetic, centers, and the nine maps."""

import random

import pytest

from qsmash.algebra import (
    Kinv,
    E,
    X,
    Y,
    c_element,
    monomial,
    phi,
    random_element,
    z_element,
)
from qsmash.presented import (
    PARAMETRIC_PRESETS,
    PRESETS,
    QCAlgebra,
    QuotientMap,
    quotient,
)
from qsmash.scalars import ONE, Scalar, q_power


def test_qc_crossing_rule():
    alg = QCAlgebra(("K", "Y"), invertible={"K"}, twists={("Y", "K"): 1})
    K, Yg = alg.gen("K"), alg.gen("Y")
    assert Yg * K == (K * Yg).scale(q_power(1))
    assert alg.monomial(Y=2) * alg.monomial(K=3) == alg.monomial(q_power(6), K=3, Y=2)
    assert K * K.invert() == alg.one()


def test_qc_exponent_guard():
    alg = QCAlgebra(("K", "Y"), invertible={"K"}, twists={("Y", "K"): 1})
    with pytest.raises(ValueError):
        alg.monomial(Y=-1)
    with pytest.raises(ValueError):
        alg.gen("Y").invert()
    assert alg.monomial(K=-4).coeff((-4, 0)) == ONE


def test_qc_associativity_random():
    alg = QCAlgebra(
        ("K", "Y", "E"),
        invertible={"K"},
        twists={("Y", "K"): 1, ("E", "K"): -2, ("E", "Y"): -1},
    )
    rng = random.Random(404)
    pool = [ONE, -ONE, q_power(1), q_power(-1)]

    def rand():
        terms = {}
        for _ in range(rng.randint(1, 3)):
            u = (rng.randint(-2, 2), rng.randint(0, 2), rng.randint(0, 2))
            terms[u] = rng.choice(pool)
        return alg.element(terms)

    for _ in range(40):
        a, b, c = rand(), rand(), rand()
        assert (a * b) * c == a * (b * c)


def test_all_presets_well_defined():
    for name in PRESETS:
        param = Scalar(2) if name in PARAMETRIC_PRESETS else None
        q_map = quotient(name, param)
        report = q_map.check_well_defined()
        assert all(ok for _, ok in report), (name, report)
        assert len(report) == 8


def test_well_definedness_check_has_teeth():
    # flip the E,Y twist under the X-killing images: E*Y relation must fail
    bad_target = QCAlgebra(
        ("K", "Y", "E"),
        invertible={"K"},
        twists={("Y", "K"): 1, ("E", "K"): -2, ("E", "Y"): +1},
    )
    bad = QuotientMap(
        "bad",
        bad_target,
        {
            "K": bad_target.gen("K"),
            "Kinv": bad_target.monomial(K=-1),
            "X": bad_target.zero(),
            "Y": bad_target.gen("Y"),
            "E": bad_target.gen("E"),
        },
    )
    failed = [name for name, ok in bad.check_well_defined() if not ok]
    assert failed == ["E*Y = X + q^-1*Y*E"]


def test_project_is_multiplicative():
    rng = random.Random(777)
    maps = [
        quotient("A_mod_X"),
        quotient("A_mod_phi"),
        quotient("A_mod_X_q", Scalar(3)),
        quotient("A_mod_phi_r", q_power(1)),
        quotient("L", Scalar(5)),
    ]
    for q_map in maps:
        for _ in range(25):
            x = random_element(rng, 2)
            y = random_element(rng, 2)
            assert q_map.project(x * y) == q_map.project(x) * q_map.project(y)
            assert q_map.project(x + y) == q_map.project(x) + q_map.project(y)


def test_frozen_images_of_z_and_c():
    mod_x = quotient("A_mod_X")
    img_z = mod_x.project(z_element())
    expect = mod_x.target.monomial(q_power(-2) - ONE, K=-1, Y=2, E=1)
    assert img_z == expect

    mod_phi = quotient("A_mod_phi")
    img_c = mod_phi.project(c_element())
    expect = mod_phi.target.monomial(q_power(2) - ONE, K=1, Y=2, E=1)
    assert img_c == expect

    # and the elements the maps kill really die
    assert mod_x.project(X).is_zero()
    assert mod_phi.project(phi()).is_zero()
    assert quotient("A_mod_Y").project(Y).is_zero()
    assert quotient("A_mod_E").project(E).is_zero()


def test_z_congruent_to_eyyk_mod_x():
    mod_x = quotient("A_mod_X")
    rep = (E * Y * Y * Kinv).scale(ONE - q_power(2))
    assert mod_x.project(z_element()) == mod_x.project(rep)
    assert not (z_element() - rep).is_zero()  # they differ by a multiple of X


def test_point_evaluation_preset():
    kappa = Scalar(7)
    ev = quotient("L", kappa)
    assert ev.project(monomial(i=3)).scalar_value() == kappa ** 3
    assert ev.project(monomial(i=-2)).scalar_value() == kappa ** -2
    assert ev.project(X + Y + E).is_zero()
    assert ev.target.names == ()


def test_zeta_presets_pin_the_invariants():
    zeta = Scalar(3)
    qx = quotient("A_mod_X_q", zeta)
    assert qx.project(z_element()) == qx.target.one().scale(zeta)
    assert qx.project(X).is_zero()

    pr = quotient("A_mod_phi_r", zeta)
    assert pr.project(c_element()) == pr.target.one().scale(zeta)
    assert pr.project(phi()).is_zero()


def test_parameter_validation():
    with pytest.raises(ValueError):
        quotient("L")
    with pytest.raises(ValueError):
        quotient("A_mod_X_q", Scalar(0))
    with pytest.raises(ValueError):
        quotient("A_mod_X", Scalar(1))
    with pytest.raises(ValueError):
        quotient("nope")


def test_center_bases():
    mod_x = quotient("A_mod_X")
    basis = mod_x.target.center_basis(3)
    assert len(basis) == 2
    assert basis[0] == mod_x.target.one()
    assert basis[1] == mod_x.target.monomial(K=-1, Y=2, E=1)
    # the nontrivial one is the image of phi*Y*K^-1 up to a scalar
    img = mod_x.project(z_element())
    assert img == basis[1].scale(q_power(-2) - ONE)

    mod_phi = quotient("A_mod_phi")
    basis = mod_phi.target.center_basis(3)
    assert len(basis) == 2
    assert basis[1] == mod_phi.target.monomial(K=1, Y=2, E=1)

    assert len(quotient("Ybb").target.center_basis(3)) == 1
    assert len(quotient("A_mod_Y").target.center_basis(4)) == 1
    assert len(quotient("A_mod_E").target.center_basis(4)) == 1
    # Laurent polynomials in K alone are commutative: everything is central
    assert len(quotient("A_mod_YE").target.center_basis(2)) == 5


def test_center_elements_commute():
    for name in ("A_mod_X", "A_mod_phi"):
        t = quotient(name).target
        for z in t.center_basis(3):
            for g in t.names:
                assert z * t.gen(g) == t.gen(g) * z


def test_manifest_round_trip():
    t = quotient("A_mod_X").target
    m = t.manifest()
    assert m == {
        "generators": ["K", "Y", "E"],
        "invertible": ["K"],
        "twists": {"Y,K": 1, "E,K": -2, "E,Y": -1},
    }


def test_qc_text():
    t = quotient("A_mod_X").target
    el = t.monomial(q_power(-2) - ONE, K=-1, Y=2, E=1)
    assert el.to_text() == "-(q^2 - 1)/q^2 * K^-1*Y^2*E"
    assert t.zero().to_text() == "0"
    assert t.one().to_text() == "1"
