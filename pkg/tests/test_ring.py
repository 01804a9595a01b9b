"""Scalar ring: canonical forms, root reduction, division, parsing."""

import random
from fractions import Fraction

import pytest

from ybtrace.errors import ContextMismatch, NotAUnit, NotDivisible, ParseError
from ybtrace.ring import (
    GaussianRational,
    Scalar,
    ScalarContext,
    format_scalar,
    pow_int,
    scalar_from_json,
    scalar_to_json,
    substitute,
    try_div_exact,
)


@pytest.fixture
def ctx_t():
    return ScalarContext(("t",))


@pytest.fixture
def ctx_pq():
    return ScalarContext(("p", "q"), (("sqrt_pq", "p*q"),))


def test_additive_inverse(ctx_t):
    t = ctx_t.gen("t")
    assert (t + (-t)).is_zero()


def test_half_exponent_composition(ctx_t):
    half = ctx_t.gen("t", Fraction(1, 2))
    assert half * half == ctx_t.gen("t")


def test_root_square_reduces():
    ctx = ScalarContext(("q",), (("r", "1-q^2"),))
    r = ctx.gen("r")
    assert r * r == ctx.parse("1 - q^2")


def test_root_reduction_with_higher_powers():
    ctx = ScalarContext(("q",), (("r", "1-q^2"),))
    r = ctx.gen("r")
    assert pow_int(r, 4) == ctx.parse("(1-q^2)^2")
    assert pow_int(r, 3) == ctx.parse("(1-q^2)") * r


def test_pow_int_monomial_inverse(ctx_pq):
    pq = ctx_pq.parse("p*q")
    assert pow_int(pq, -1) == ctx_pq.parse("p^-1*q^-1")


def test_pow_int_root_square(ctx_pq):
    root = ctx_pq.gen("sqrt_pq")
    assert pow_int(root, 2) == ctx_pq.parse("p*q")


def test_pow_int_rejects_non_monomial(ctx_t):
    with pytest.raises(NotAUnit):
        pow_int(ctx_t.parse("1 + t"), -1)


def test_pow_int_root_inverse_needs_unit_radicand():
    ctx = ScalarContext(("q",), (("r", "1+q"),))
    with pytest.raises(NotAUnit):
        pow_int(ctx.gen("r"), -1)


def test_pow_zero_is_one(ctx_t):
    assert pow_int(ctx_t.parse("1 + t"), 0) == ctx_t.one()


def test_substitute_parameter_collapse(ctx_pq):
    target = ScalarContext(("t", "q"))
    value = substitute(
        ctx_pq.parse("p*q + p^2*q^2"), {"p": target.parse("t*q^-1")}, target
    )
    assert value == target.parse("t + t^2")


def test_substitute_empty_is_identity(ctx_pq):
    x = ctx_pq.parse("sqrt_pq + p - 2")
    assert substitute(x, {}) == x


def test_substitute_product_collapse():
    ctx = ScalarContext(("t", "a", "b", "y"))
    target = ScalarContext(("t", "s", "b", "y"))
    value = substitute(
        ctx.parse("a*b*y*t^(1/2)"), {"a": target.parse("s*b^-1*y^-1")}, target
    )
    assert value == target.parse("s*t^(1/2)")


def test_substitute_root_image(ctx_pq):
    target = ScalarContext(("t", "q"))
    value = substitute(ctx_pq.gen("sqrt_pq"), {"p": target.parse("t*q^-1")}, target)
    assert value == target.parse("t^(1/2)")


def test_substitute_accepts_text_bindings(ctx_pq):
    target = ScalarContext(("t", "q"))
    value = substitute(ctx_pq.parse("p*q"), {"p": "t*q^-1"}, target)
    assert value == target.gen("t")


def test_substitute_negative_exponent_needs_unit(ctx_t):
    ctx = ScalarContext(("u",))
    with pytest.raises(NotAUnit):
        substitute(ctx.parse("u^-1"), {"u": ctx_t.parse("1 + t")}, ctx_t)


def test_div_difference_of_squares(ctx_t):
    num = ctx_t.parse("t - t^-1")
    den = ctx_t.parse("t^(1/2) - t^(-1/2)")
    assert try_div_exact(num, den) == ctx_t.parse("t^(1/2) + t^(-1/2)")


def test_div_by_one(ctx_t):
    x = ctx_t.parse("3 - t + t^2")
    assert try_div_exact(x, ctx_t.one()) == x


def test_div_by_monomial(ctx_t):
    assert try_div_exact(ctx_t.parse("1 + t"), ctx_t.gen("t")) == ctx_t.parse(
        "t^-1 + 1"
    )


def test_div_failure(ctx_t):
    with pytest.raises(NotDivisible):
        try_div_exact(ctx_t.parse("1 + t"), ctx_t.parse("1 + t^2"))


def test_div_with_root_denominator(ctx_pq):
    den = ctx_pq.parse("sqrt_pq + sqrt_pq^-1")
    num = ctx_pq.parse("sqrt_pq*(1 + p*q)")
    assert try_div_exact(num, den) == ctx_pq.parse("p*q")


def test_parse_half_exponents_round_trip(ctx_t):
    x = ctx_t.parse("t^(1/2) + t^(-1/2)")
    assert len(x.terms) == 2
    assert ctx_t.parse(format_scalar(x)) == x


def test_parse_polynomial(ctx_t):
    ctx = ScalarContext(("q",))
    x = ctx.parse("1 - 2*q - q^2")
    assert format_scalar(x) == "1 - 2*q - q^2"


def test_parse_error_position(ctx_t):
    with pytest.raises(ParseError):
        ctx_t.parse("q^")
    with pytest.raises(ParseError):
        ctx_t.parse("t + %")
    with pytest.raises(ParseError):
        ctx_t.parse("t t")


def test_parse_imaginary(ctx_t):
    x = ctx_t.parse("i*t - i")
    assert x * x == ctx_t.parse("-(t^2 - 2*t + 1)")


def test_context_mismatch(ctx_t, ctx_pq):
    with pytest.raises(ContextMismatch):
        ctx_t.gen("t") + ctx_pq.gen("p")


def test_context_validation():
    with pytest.raises(ValueError):
        ScalarContext(("t", "t"))
    with pytest.raises(ValueError):
        ScalarContext(("i",))
    with pytest.raises(ValueError):
        ScalarContext(("t",), (("r", "0"),))


def test_gaussian_rational_inverse():
    c = GaussianRational(1, 2)
    assert c * c.inverse() == GaussianRational(1)


def test_json_round_trip(ctx_pq):
    x = ctx_pq.parse("sqrt_pq^-1 + i*p^(3/2) - 2*q")
    obj = scalar_to_json(x)
    assert scalar_from_json(ctx_pq, obj) == x
    exps = {k for term in obj["terms"] for k in term["exps"]}
    assert exps <= {"p", "q", "sqrt_pq"}


# -- randomized properties ----------------------------------------------------


def _random_scalar(rng, ctx, max_terms=6):
    terms = []
    nroots = len(ctx.root_names)
    for _ in range(rng.randint(0, max_terms)):
        coeff = GaussianRational(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-2, 2), 1) if rng.random() < 0.25 else 0,
        )
        exps = [rng.randint(-4, 4) for _ in ctx.generators]
        exps += [2 * rng.randint(0, 1) for _ in range(nroots)]
        terms.append((tuple(exps), coeff))
    from ybtrace.ring import _canonical

    return Scalar(ctx, _canonical(ctx, terms))


def test_ring_axioms_randomized():
    rng = random.Random(20240521)
    ctx = ScalarContext(("p", "q"), (("sqrt_pq", "p*q"),))
    for _ in range(1000):
        a = _random_scalar(rng, ctx)
        b = _random_scalar(rng, ctx)
        c = _random_scalar(rng, ctx, max_terms=3)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_canonical_form_uniqueness():
    rng = random.Random(99)
    ctx = ScalarContext(("p", "q"), (("sqrt_pq", "p*q"),))
    for _ in range(300):
        a = _random_scalar(rng, ctx)
        b = _random_scalar(rng, ctx)
        assert ((a - b).is_zero()) == (format_scalar(a) == format_scalar(b))


def test_root_reduction_confluence():
    rng = random.Random(7)
    ctx = ScalarContext(("q",), (("r", "1-q^2"),))
    factors = [ctx.parse(text) for text in ("r", "q*r", "r - q", "1 + r", "q^-1*r")]
    reference = None
    for _ in range(20):
        order = factors[:]
        rng.shuffle(order)
        product = ctx.one()
        for f in order:
            product = product * f
        if reference is None:
            reference = product
        assert product == reference


def test_division_round_trip_randomized():
    rng = random.Random(4242)
    ctx = ScalarContext(("p", "q"), (("sqrt_pq", "p*q"),))
    done = 0
    while done < 200:
        a = _random_scalar(rng, ctx, max_terms=4)
        b = _random_scalar(rng, ctx, max_terms=3)
        if b.is_zero():
            continue
        assert try_div_exact(a * b, b) == a
        done += 1
