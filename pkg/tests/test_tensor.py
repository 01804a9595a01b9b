"""Sparse matrices: products, embeddings, traces, exact inversion."""

import random

import pytest

from ybtrace.catalog import get_rmatrix
from ybtrace.errors import (
    DimensionMismatch,
    InverseOutsideRing,
    NonInvertible,
    PositionOutOfRange,
)
from ybtrace.ring import ScalarContext
from ybtrace.tensor import (
    SquareMatrix,
    embed_generator,
    invert,
    kron,
    matadd,
    matmul,
    matrix_from_json,
    matrix_to_json,
    partial_trace,
    scalar_scale,
    trace,
    trace_product,
)


@pytest.fixture
def ctx():
    return ScalarContext(("p", "q"), (("sqrt_pq", "p*q"),))


def _identity(ctx, side):
    return SquareMatrix.identity(ctx, side)


def test_kron_identities(ctx):
    i2 = _identity(ctx, 2)
    assert kron(i2, i2) == _identity(ctx, 4)
    d = SquareMatrix.diagonal(ctx, ["p", "q"])
    assert kron(d, i2) == SquareMatrix.diagonal(ctx, ["p", "p", "q", "q"])


def test_kron_weight_expansion(ctx):
    # oracle: expand the four diagonal entries by hand
    mu = SquareMatrix.diagonal(ctx, ["sqrt_pq", "sqrt_pq^-1"])
    product = kron(mu, mu)
    values = ["p*q", "1", "1", "p^-1*q^-1"]
    expected = {}
    for a in range(2):
        for b in range(2):
            expected[(2 * a + b, 2 * a + b)] = ctx.parse(values[2 * a + b])
    assert product == SquareMatrix(ctx, 4, expected)


def test_matmul_identity_and_inverse(ctx):
    r = get_rmatrix("R2.1").matrix
    assert matmul(r, invert(r)) == _identity(r.ctx, 4)
    x = SquareMatrix.from_rows(ctx, [[1, "p"], [0, "q"]])
    assert matmul(_identity(ctx, 2), x) == x


def test_r13_is_an_involution():
    r = get_rmatrix("R1.3").matrix
    assert matmul(r, r) == _identity(r.ctx, 4)
    assert invert(r) == r


def test_embed_edge_cases(ctx):
    r = get_rmatrix("R2.1").matrix
    assert embed_generator(r, 1, 2, 2) == r
    assert embed_generator(_identity(ctx, 4), 2, 3, 2) == _identity(ctx, 8)
    with pytest.raises(PositionOutOfRange):
        embed_generator(r, 3, 3, 2)


def test_embed_matches_kron_oracle():
    r = get_rmatrix("R2.1").matrix
    i2 = _identity(r.ctx, 2)
    assert embed_generator(r, 2, 3, 2) == kron(i2, r)
    assert embed_generator(r, 1, 3, 2) == kron(r, i2)
    assert embed_generator(r, 2, 4, 2) == kron(i2, kron(r, i2))


def test_far_commutativity_of_embeddings():
    for name in ("R3.1", "R2.1", "R2.2", "R2.3", "R1.1", "R1.2", "R1.3", "R1.4"):
        r = get_rmatrix(name).matrix
        a = embed_generator(r, 1, 4, 2)
        b = embed_generator(r, 3, 4, 2)
        assert matmul(a, b) == matmul(b, a)


def test_trace_of_weights(ctx):
    mu = SquareMatrix.diagonal(ctx, ["sqrt_pq", "sqrt_pq^-1"])
    assert trace(mu) == ctx.parse("sqrt_pq + sqrt_pq^-1")


def test_partial_trace_reproduces_weight(ctx):
    # slot-2 contraction of R (mu x mu) is alpha beta mu for the first
    # R2.1 operator row
    r = get_rmatrix("R2.1").matrix
    from ybtrace.tensor import matrix_substitute

    r = matrix_substitute(r, {}, ctx)
    mu = SquareMatrix.diagonal(ctx, ["sqrt_pq", "sqrt_pq^-1"])
    closed = partial_trace(matmul(r, kron(mu, mu)), [2], 2)
    assert closed == scalar_scale(mu, ctx.parse("sqrt_pq^-1"))


def test_partial_trace_full_contraction(ctx):
    m = SquareMatrix.from_rows(ctx, [["p", 1], [0, "q"]])
    total = partial_trace(m, [1], 2)
    assert total.side == 1
    assert total.get(0, 0) == trace(m)


def test_partial_trace_composes(ctx):
    rng = random.Random(5)
    entries = {}
    for _ in range(8):
        entries[(rng.randrange(4), rng.randrange(4))] = ctx.parse(
            f"{rng.randint(1, 5)}*p^{rng.randint(-1, 1)}"
        )
    m = SquareMatrix(ctx, 4, entries)
    once = partial_trace(m, [2], 2)
    assert partial_trace(once, [1], 2).get(0, 0) == trace(m)
    assert partial_trace(m, [1, 2], 2).get(0, 0) == trace(m)


def test_trace_cyclicity_random(ctx):
    rng = random.Random(11)
    for _ in range(20):
        a_entries, b_entries = {}, {}
        for _ in range(6):
            a_entries[(rng.randrange(4), rng.randrange(4))] = ctx.parse(
                f"{rng.randint(-3, 3)}*q^{rng.randint(-1, 2)}"
            )
            b_entries[(rng.randrange(4), rng.randrange(4))] = ctx.parse(
                f"{rng.randint(-3, 3)}*p^{rng.randint(-1, 2)}"
            )
        a = SquareMatrix(ctx, 4, a_entries)
        b = SquareMatrix(ctx, 4, b_entries)
        assert trace(matmul(a, b)) == trace(matmul(b, a))
        assert trace_product(a, b) == trace(matmul(a, b))


def test_invert_diagonal_monomials(ctx):
    d = SquareMatrix.diagonal(ctx, ["p", "q^-1", "sqrt_pq"])
    inv = invert(d)
    assert matmul(d, inv) == _identity(ctx, 3)


def test_invert_r21_satisfies_its_relation():
    r = get_rmatrix("R2.1").matrix
    ctx = r.ctx
    rinv = invert(r)
    # R^{-1} = (R + (pq-1) I) / (pq)
    shifted = matadd(r, scalar_scale(_identity(ctx, 4), ctx.parse("p*q-1")))
    assert scalar_scale(rinv, ctx.parse("p*q")) == shifted


def test_invert_dense_binomial_matrix_needs_adjugate():
    r = get_rmatrix("R1.1").matrix
    assert matmul(r, invert(r)) == _identity(r.ctx, 4)


def test_every_catalog_matrix_inverts_exactly():
    for name in ("R3.1", "R2.1", "R2.2", "R2.3", "R1.1", "R1.2", "R1.3", "R1.4"):
        r = get_rmatrix(name).matrix
        assert matmul(r, invert(r)) == _identity(r.ctx, 4), name


def test_invert_singular():
    ctx = ScalarContext(("q",))
    m = SquareMatrix.from_rows(ctx, [["q", "q"], ["q", "q"]])
    with pytest.raises(NonInvertible):
        invert(m)


def test_invert_outside_ring():
    ctx = ScalarContext(("q",))
    m = SquareMatrix.diagonal(ctx, ["1+q"] * 5)
    with pytest.raises(InverseOutsideRing):
        invert(m)


def test_large_invert_via_unit_pivots():
    ctx = ScalarContext(("q",))
    entries = {}
    side = 6
    for k in range(side):
        entries[(k, (k + 1) % side)] = ctx.parse(f"q^{k - 2}")
    m = SquareMatrix(ctx, side, entries)
    assert matmul(m, invert(m)) == _identity(ctx, side)


def test_dimension_mismatch(ctx):
    a = _identity(ctx, 2)
    b = _identity(ctx, 3)
    with pytest.raises(DimensionMismatch):
        matmul(a, b)
    with pytest.raises(DimensionMismatch):
        matadd(a, b)


def test_json_round_trip(ctx):
    m = SquareMatrix.from_rows(ctx, [["p", 0], ["sqrt_pq^-1", "1-q"]])
    obj = matrix_to_json(m)
    assert obj["side"] == 2
    assert [e[:2] for e in obj["entries"]] == sorted(e[:2] for e in obj["entries"])
    assert matrix_from_json(ctx, obj) == m
