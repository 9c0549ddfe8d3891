"""Quotients by C - lambda: reduction, grading and lifting."""

import random
from fractions import Fraction

import pytest

from nlie.brackets import random_polynomial
from nlie.parser import parse_polynomial
from nlie.quotient import NotMHomogeneous, QuotientContext, QuotientError
from nlie.structures import make_elliptic, make_quadric, make_sl2


def sl2_quotient(lam=2):
    spec = make_sl2()
    return spec, QuotientContext.create(spec.jacobian_bracket(), lam)


def test_create_validation():
    spec = make_sl2()
    with pytest.raises(QuotientError):
        QuotientContext.create(spec.jacobian_bracket(), 0)
    qctx = QuotientContext.create(spec.jacobian_bracket(), Fraction(3, 2))
    assert qctx.lam == Fraction(3, 2)
    assert qctx.m == 2 and qctx.arity == 2


def test_reduce_is_ideal_membership():
    spec, qctx = sl2_quotient(lam=2)
    e, f, h = spec.ctx.gens()
    # h^2 + 4ef = 2C, so h^2 + 4ef - 4 lies in (C - 2)
    assert qctx.is_zero(h ** 2 + 4 * e * f - 4)
    assert not qctx.is_zero(h)
    assert qctx.reduce(spec.casimir) == spec.ctx.constant(2)


def test_reduce_is_idempotent_and_linear():
    spec, qctx = sl2_quotient()
    rng = random.Random(59)
    for _ in range(20):
        a = random_polynomial(rng, spec.ctx, max_degree=4)
        b = random_polynomial(rng, spec.ctx, max_degree=4)
        ra = qctx.reduce(a)
        assert qctx.reduce(ra) == ra
        assert qctx.reduce(a + 3 * b) == qctx.reduce(ra + 3 * qctx.reduce(b))


def test_bracket_well_defined_on_cosets():
    # shifting an argument by a multiple of C - lambda cannot change
    # the reduced bracket
    spec, qctx = sl2_quotient()
    mod = spec.casimir - 2
    rng = random.Random(61)
    for _ in range(15):
        a, b, g = (random_polynomial(rng, spec.ctx, max_degree=3)
                   for _ in range(3))
        assert qctx.bracket_reduce(a + mod * g, b) == qctx.bracket_reduce(a, b)


def test_grade_decompose():
    spec, qctx = sl2_quotient()
    e, f, h = spec.ctx.gens()
    classes = qctx.grade_decompose(e * f + h + 1)
    assert [(c.residue, str(c.part)) for c in classes] == \
        [(0, "e*f + 1"), (1, "h")]
    assert qctx.grade_decompose(spec.ctx.zero()) == []


def test_bracket_residue_formula():
    spec, qctx = sl2_quotient()
    # n = 2, m = 2: bracket of classes r1, r2 lands in r1 + r2 - 1 mod 2
    assert qctx.bracket_residue((1, 1)) == 1
    assert qctx.bracket_residue((1, 0)) == 0
    elliptic = make_elliptic(1)
    q3 = QuotientContext.create(elliptic.jacobian_bracket(), 1)
    assert q3.m == 3
    assert q3.bracket_residue((2, 1)) == 0
    assert q3.bracket_residue((1, 1)) == 2


@pytest.mark.parametrize("spec,lam", [
    (make_quadric(2), 1),
    (make_elliptic(1), 2),
    (make_quadric(3), Fraction(-1, 2)),
])
def test_verify_grading(spec, lam):
    qctx = QuotientContext.create(spec.jacobian_bracket(), lam)
    residues = tuple(range(1, spec.arity + 1))
    report = qctx.verify_grading((tuple(r % qctx.m for r in residues)),
                                 trials=10, seed=11)
    assert report.passed, report.failures[:1]


def test_lift_restores_homogeneity():
    spec, qctx = sl2_quotient(lam=2)
    rng = random.Random(67)
    e, f, h = spec.ctx.gens()
    for _ in range(20):
        deg = rng.choice([1, 2, 3])
        top = random_polynomial(rng, spec.ctx, max_degree=deg)
        parts = [p for d, p in top.homogeneous_components().items()
                 if d % 2 == deg % 2]
        if not parts:
            continue
        mixed = sum(parts, spec.ctx.zero())
        lifted = qctx.homogeneous_lift(mixed)
        assert lifted.is_homogeneous()
        assert qctx.is_zero(lifted - mixed)


def test_lift_frozen_example():
    spec, qctx = sl2_quotient(lam=1)
    e, f, h = spec.ctx.gens()
    lifted = qctx.homogeneous_lift(e ** 2 * h + 3 * e)
    # 3e climbs two degrees via multiplication by C/lambda
    assert lifted == e ** 2 * h + 3 * e * spec.casimir
    assert lifted.total_degree() == 3


def test_lift_rejects_mixed_classes():
    spec, qctx = sl2_quotient()
    e, f, h = spec.ctx.gens()
    with pytest.raises(NotMHomogeneous):
        qctx.homogeneous_lift(e + e * f)
    with pytest.raises(QuotientError):
        qctx.homogeneous_lift(spec.casimir - 2)  # zero in the quotient
