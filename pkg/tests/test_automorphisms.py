"""Group laws, relation preservation, and prime transport."""

import random

import pytest

from qsmash.algebra import (
    E,
    K,
    X,
    Y,
    c_element,
    phi,
    random_element,
    z_element,
)
from qsmash.automorphisms import IDENTITY, Automorphism, random_automorphism
from qsmash.scalars import Scalar, q_power
from qsmash.spectrum import NODES, ideal, leq, representative


def test_generator_images():
    s = Automorphism(Scalar(2), q_power(1), Scalar(3), 1)
    assert s.apply(K) == K.scale(3)
    assert s.apply(X) == (K * X).scale(2)
    assert s.apply(Y) == (K ** -1 * Y).scale(q_power(1))
    assert s.apply(E) == (K * K * E).scale(Scalar(2) * q_power(-3))
    assert s.apply(X * Y) == s.apply(X) * s.apply(Y)


def test_relations_preserved_on_random_tuples():
    rng = random.Random(2024)
    for _ in range(25):
        s = random_automorphism(rng)
        assert all(ok for _, ok in s.check_relations()), s.literal()


def test_is_homomorphism_pointwise():
    rng = random.Random(88)
    for _ in range(15):
        s = random_automorphism(rng, max_twist=3)
        x = random_element(rng, 2)
        y = random_element(rng, 2)
        assert s.apply(x * y) == s.apply(x) * s.apply(y)
        assert s.apply(x + y) == s.apply(x) + s.apply(y)


def test_compose_closed_form_matches_pointwise():
    rng = random.Random(3111)
    probes = [K, X, Y, E, X * Y, phi()]
    for _ in range(25):
        s = random_automorphism(rng)
        t = random_automorphism(rng)
        st = s.compose(t)
        for p in probes:
            assert st.apply(p) == s.apply(t.apply(p)), (s.literal(), t.literal())


def test_inverse():
    rng = random.Random(5)
    for _ in range(25):
        s = random_automorphism(rng)
        assert s.compose(s.inverse()).is_identity()
        assert s.inverse().compose(s).is_identity()
        x = random_element(rng, 2)
        assert s.apply(s.inverse().apply(x)) == x


def test_worked_compositions():
    g = Scalar(2)
    first = Automorphism(1, 1, g, 1)
    second = Automorphism(1, 1, 1, 1)
    assert first.compose(second) == Automorphism(g, g.inv(), g, 2)
    assert first.inverse() == Automorphism(g, g.inv(), g.inv(), -1)
    assert IDENTITY.compose(first) == first
    assert first.compose(IDENTITY) == first


def test_phi_and_invariants_rescale():
    rng = random.Random(616)
    for _ in range(10):
        s = random_automorphism(rng, max_twist=3)
        i = s.i
        expected_phi = (K ** i * phi()).scale(s.lam)
        assert s.apply(phi()) == expected_phi
        assert s.apply(z_element()) == z_element().scale(s.z_factor())
        assert s.apply(c_element()) == c_element().scale(s.c_factor())


def test_six_fixed_ideals():
    rng = random.Random(1212)
    fixed = ["zero", "X", "phi", "Y", "E", "YE"]
    for _ in range(8):
        s = random_automorphism(rng, max_twist=3)
        for kind in fixed:
            p = ideal(kind)
            assert s.act_on_prime(p) == p
            for gen in p.generators():
                assert p.contains(s.apply(gen)), (s.literal(), kind)


def test_prime_transport():
    s = Automorphism(Scalar(2), Scalar(3), q_power(1), 2)
    assert s.act_on_prime(ideal("P", 6)) == ideal("P", Scalar(6) / q_power(1))
    zf = Scalar(6) / q_power(1) * q_power(2)  # lam*mu/gamma * q^i
    assert s.act_on_prime(ideal("Q", zf)) == ideal("Q", 1)
    cf = Scalar(6) * q_power(1) * q_power(2)
    assert s.act_on_prime(ideal("R", cf)) == ideal("R", 1)
    # image ideal really contains the image of every generator
    rng = random.Random(42)
    for _ in range(10):
        t = random_automorphism(rng, max_twist=3)
        for kind, param in (("P", 2), ("Q", 3), ("R", Scalar(5))):
            p = ideal(kind, param)
            image = t.act_on_prime(p)
            for gen in p.generators():
                assert image.contains(t.apply(gen)), (t.literal(), kind)
            # and transport is compatible with inversion
            assert t.inverse().act_on_prime(image) == p


def test_transport_preserves_inclusions():
    rng = random.Random(99)
    for _ in range(5):
        s = random_automorphism(rng, max_twist=2)
        for node in NODES:
            p = representative(node)
            for other in NODES:
                r = representative(other)
                assert leq(p, r) == leq(s.act_on_prime(p), s.act_on_prime(r))


def test_parameter_validation():
    with pytest.raises(ValueError):
        Automorphism(0, 1, 1, 0)
    with pytest.raises(ValueError):
        Automorphism(1, Scalar(0), 1, 0)
    with pytest.raises(TypeError):
        Automorphism(1, 1, 1, "2")


def test_literal_format():
    s = Automorphism(Scalar(2), q_power(-1), q_power(2) - Scalar(1), -3)
    assert s.literal() == "aut(2;q^-1;q^2 - 1;-3)"
    assert IDENTITY.literal() == "aut(1;1;1;0)"
