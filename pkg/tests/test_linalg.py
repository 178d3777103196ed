import random

from qsmash.scalars import Scalar, q_power, ONE, Q
from qsmash.linalg import SpanBuilder, kernel_basis, solve_in_span, vec_axpy


def test_span_rank_and_membership():
    sb = SpanBuilder()
    assert sb.add({(0,): ONE, (1,): Q})
    assert sb.add({(1,): ONE})
    assert not sb.add({(0,): Scalar(2), (1,): 2 * Q + ONE - ONE})  # 2*(first row) shifted
    assert sb.rank == 2
    assert sb.contains({(0,): Q, (1,): Q})
    assert not sb.contains({(2,): ONE})


def test_kernel_of_dependent_columns():
    cols = [
        ("a", {(0,): ONE}),
        ("b", {(0,): Q}),
        ("c", {(1,): ONE}),
    ]
    ker = kernel_basis(cols)
    assert len(ker) == 1
    comb = ker[0]
    # q * a - b = 0 up to scaling
    assert set(comb) == {"a", "b"}
    assert comb["a"] / comb["b"] == -Q
    # verify the combination really is in the kernel
    acc = {}
    for label, vec in cols:
        c = comb.get(label)
        if c is not None:
            vec_axpy(acc, c, vec)
    assert not acc


def test_kernel_full_rank_is_trivial():
    cols = [("a", {(0,): ONE}), ("b", {(1,): q_power(-3)})]
    assert kernel_basis(cols) == []


def test_solve_in_span():
    cols = [("a", {(0,): ONE, (1,): ONE}), ("b", {(1,): ONE})]
    sol = solve_in_span(cols, {(0,): Q, (1,): ONE})
    assert sol is not None
    assert sol["a"] == Q
    assert sol["b"] == ONE - Q
    assert solve_in_span(cols, {(2,): ONE}) is None


def test_random_consistency_with_dense_elimination():
    rng = random.Random(7)
    for _ in range(20):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        dense = [[Scalar(rng.randint(-2, 2)) for _ in range(n)] for _ in range(m)]
        cols = []
        for j in range(m):
            vec = {i: dense[j][i] for i in range(n) if not dense[j][i].is_zero()}
            cols.append((j, vec))
        ker = kernel_basis(cols)
        sb = SpanBuilder()
        for _, vec in cols:
            sb.add(vec)
        assert sb.rank + len(ker) == m
        for comb in ker:
            acc = {}
            for label, vec in cols:
                if label in comb:
                    vec_axpy(acc, comb[label], vec)
            assert not acc
