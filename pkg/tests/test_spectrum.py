"""Inclusion order on the nine primes, its diagram, and membership."""

import pytest

from qsmash.algebra import E, K, X, Y, monomial, one, phi, z_element
from qsmash.scalars import Scalar, q_power
from qsmash.spectrum import (
    NODES,
    NODE_HEIGHTS,
    PrimeIdeal,
    _heights,
    adjacency,
    hasse_edges,
    ideal,
    leq,
    leq_matrix,
    member_bounded,
    representative,
    to_dot,
)

T, F = True, False

EXPECTED_MATRIX = [
    # zero  X    phi   Y    E    YE   P    Q    R
    [T, T, T, T, T, T, T, T, T],  # zero
    [F, T, F, T, T, T, T, T, F],  # (X)
    [F, F, T, T, T, T, T, F, T],  # (phi)
    [F, F, F, T, F, T, T, F, F],  # (X, Y)
    [F, F, F, F, T, T, T, F, F],  # (X, E)
    [F, F, F, F, F, T, T, F, F],  # (X, Y, E)
    [F, F, F, F, F, F, T, F, F],  # P
    [F, F, F, F, F, F, F, T, F],  # Q
    [F, F, F, F, F, F, F, F, T],  # R
]

EXPECTED_EDGES = [
    ("zero", "X"),
    ("zero", "phi"),
    ("X", "Y"),
    ("X", "E"),
    ("X", "Q_family"),
    ("phi", "Y"),
    ("phi", "E"),
    ("phi", "R_family"),
    ("Y", "YE"),
    ("E", "YE"),
    ("YE", "P_family"),
]


def test_leq_matrix_frozen():
    assert leq_matrix() == EXPECTED_MATRIX


def test_matrix_is_a_partial_order():
    m = leq_matrix()
    n = len(m)
    for i in range(n):
        assert m[i][i]
        for j in range(n):
            if i != j:
                assert not (m[i][j] and m[j][i])
            for k in range(n):
                if m[i][j] and m[j][k]:
                    assert m[i][k]


def test_hasse_is_the_transitive_reduction():
    edges = hasse_edges()
    assert edges == EXPECTED_EDGES
    assert len(edges) == 11
    # closing the covers recovers the full matrix
    idx = {n: i for i, n in enumerate(NODES)}
    closure = [[i == j for j in range(len(NODES))] for i in range(len(NODES))]
    for lo, hi in edges:
        closure[idx[lo]][idx[hi]] = True
    for k in range(len(NODES)):
        for i in range(len(NODES)):
            for j in range(len(NODES)):
                if closure[i][k] and closure[k][j]:
                    closure[i][j] = True
    assert closure == leq_matrix()


def test_membership_witnesses():
    assert ideal("Y").contains(X)
    assert ideal("E").contains(X)
    assert ideal("E").contains(phi())
    assert not ideal("phi").contains(X)
    assert not ideal("X").contains(phi())
    assert ideal("X").contains(X * Y - (Y * X).scale(q_power(1)))
    kappa = Scalar(2)
    p = ideal("P", kappa)
    assert p.contains(Y) and p.contains(E) and p.contains(K - one().scale(kappa))
    assert not p.contains(K - one().scale(3))
    q3 = ideal("Q", 3)
    assert q3.contains(z_element() - one().scale(3))
    assert not q3.contains(z_element() - one())


def test_families_with_distinct_parameters_are_incomparable():
    for kind in ("P", "Q", "R"):
        a = ideal(kind, 1)
        b = ideal(kind, 2)
        assert leq(a, a)
        assert not leq(a, b)
        assert not leq(b, a)
    for zeta in (Scalar(1), Scalar(2), q_power(1)):
        assert leq(ideal("X"), ideal("Q", zeta))
        assert leq(ideal("phi"), ideal("R", zeta))


def test_parameter_validation():
    with pytest.raises(ValueError):
        ideal("P")
    with pytest.raises(ValueError):
        ideal("Q", 0)
    with pytest.raises(ValueError):
        ideal("X", 1)
    with pytest.raises(ValueError):
        ideal("bogus")


def test_classify():
    assert ideal("X").classify() == {
        "kind": "X",
        "label": "(X)",
        "param": None,
        "maximal": False,
        "primitive": False,
        "completely_prime": True,
        "height": 1,
    }
    got = ideal("P", 2).classify()
    assert got["label"] == "P(2)"
    assert got["maximal"] and got["primitive"] and got["height"] == 4
    assert ideal("Y").classify()["primitive"] and not ideal("Y").classify()["maximal"]
    assert ideal("E").classify()["primitive"]
    assert ideal("zero").classify()["primitive"]
    assert not ideal("YE").classify()["primitive"]
    for node in NODES:
        assert representative(node).classify()["completely_prime"]


def test_heights_match_the_poset():
    assert _heights() == NODE_HEIGHTS


def test_dot_output_frozen_and_deterministic():
    expected = (
        "digraph spectrum {\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        '  zero [label="0"];\n'
        '  X [label="(X)"];\n'
        '  phi [label="(phi)"];\n'
        '  Y [label="(X, Y)"];\n'
        '  E [label="(X, E)"];\n'
        '  YE [label="(X, Y, E)"];\n'
        '  P_family [label="P(kappa)"];\n'
        '  Q_family [label="Q(zeta)"];\n'
        '  R_family [label="R(zeta)"];\n'
        "  zero -> X;\n"
        "  zero -> phi;\n"
        "  X -> Y;\n"
        "  X -> E;\n"
        "  X -> Q_family;\n"
        "  phi -> Y;\n"
        "  phi -> E;\n"
        "  phi -> R_family;\n"
        "  Y -> YE;\n"
        "  E -> YE;\n"
        "  YE -> P_family;\n"
        "}\n"
    )
    assert to_dot() == expected
    assert to_dot() == to_dot()


def test_adjacency_export():
    adj = adjacency()
    assert adj["nodes"] == list(NODES)
    assert adj["edges"] == [list(e) for e in EXPECTED_EDGES]


def test_member_bounded_certificates():
    assert member_bounded(ideal("X"), X * Y + (Y * X).scale(q_power(2)), 3)
    assert member_bounded(ideal("E"), phi(), 2)
    assert not member_bounded(ideal("phi"), X, 3)
    assert member_bounded(ideal("zero"), monomial() - one(), 1)
    assert not member_bounded(ideal("zero"), X, 3)
    assert member_bounded(ideal("Q", 3), z_element() - one().scale(3), 4)
    # agreement with the exact test on everything certified
    el = (X * E).scale(q_power(-2)) - E * X
    assert member_bounded(ideal("X"), el, 3) and ideal("X").contains(el)
