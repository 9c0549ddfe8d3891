"""Roots, closedness, rank tools, center probes and ideal saturation."""

import random
from fractions import Fraction

import pytest

from nlie.analysis import (LeadingVariableError, NotHomogeneous,
                           center_membership, center_probe,
                           is_closed_homogeneous, jacobian_dependence,
                           kth_root, minimal_root_homogeneous,
                           poly_matrix_rank, rational_nullspace,
                           saturate_poisson_ideal)
from nlie.brackets import random_homogeneous, random_polynomial
from nlie.groebner import GREVLEX
from nlie.parser import parse_polynomial
from nlie.poly import context
from nlie.quotient import QuotientContext
from nlie.structures import (make_elliptic, make_malcev_splittable,
                             make_nlie, make_quadric, make_sl2)

XY = context("x", "y")
XYZ = context("x", "y", "z")


def pp(src, ctx=XYZ):
    return parse_polynomial(src, ctx)


# -- k-th roots and closedness ----------------------------------------


def test_root_simple():
    res = kth_root(pp("x^2 + 2*x*y + y^2"), 2)
    assert res.found and res.root == pp("x + y") and res.alpha == 1


def test_root_scaled_and_monic():
    res = kth_root(pp("8*x^3 + 36*x^2*y + 54*x*y^2 + 27*y^3"), 3)
    assert res.found
    assert res.root == pp("x + 3/2*y")  # normalized monic in the lead variable
    assert res.alpha == 8
    assert res.alpha * res.root ** 3 == pp("8*x^3 + 36*x^2*y + 54*x*y^2 + 27*y^3")


def test_root_needs_shear():
    # x^2*y^2 has no variable with a pure top power
    res = kth_root(pp("x^2*y^2", XY), 2)
    assert res.found and res.root == pp("x*y", XY)


def test_root_absent():
    assert not kth_root(pp("x^2 + y^2"), 2).found
    res = kth_root(pp("x^2 + x*y"), 2)
    assert not res.found and res.reason


def test_root_argument_validation():
    with pytest.raises(NotHomogeneous):
        kth_root(pp("x^2 + y"), 2)
    with pytest.raises(ValueError):
        kth_root(pp("x^2"), 0)
    res = kth_root(pp("x^3"), 2)
    assert not res.found and "not divisible" in res.reason


def test_root_planted_random():
    rng = random.Random(71)
    for _ in range(40):
        nv = rng.choice([2, 3, 4])
        ctx = context(*[f"x{i}" for i in range(1, nv + 1)])
        k = rng.choice([2, 3, 4])
        c = random_homogeneous(rng, ctx, rng.choice([1, 2, 3]), max_terms=3)
        alpha = Fraction(rng.choice([1, 2, -3, 5]), rng.choice([1, 2]))
        res = kth_root(alpha * c ** k, k)
        assert res.found
        assert res.alpha * res.root ** k == alpha * c ** k


def test_closedness():
    assert is_closed_homogeneous(pp("x^2 + y^2")).closed
    rep = is_closed_homogeneous(pp("(x + y)^6"))
    assert not rep.closed
    assert rep.witness_k == 6 and rep.witness_root == pp("x + y")
    # built-in Casimirs are closed
    assert is_closed_homogeneous(make_sl2().casimir).closed
    assert is_closed_homogeneous(make_elliptic(1).casimir).closed
    assert is_closed_homogeneous(make_quadric(3).casimir).closed


def test_minimal_root():
    mr = minimal_root_homogeneous(pp("x^4 + 2*x^2*y^2 + y^4"))
    assert mr.k == 2 and mr.root == pp("x^2 + y^2") and not mr.was_closed
    assert is_closed_homogeneous(mr.root).closed
    mr2 = minimal_root_homogeneous(pp("2*x*y + y^2"))
    assert mr2.k == 1 and mr2.was_closed
    assert mr2.alpha * mr2.root == pp("2*x*y + y^2")


def test_minimal_root_random_invariant():
    rng = random.Random(73)
    for _ in range(25):
        c = random_homogeneous(rng, XY, rng.choice([1, 2]), max_terms=2)
        k = rng.choice([1, 2, 3])
        f = c ** k
        mr = minimal_root_homogeneous(f)
        assert mr.alpha * mr.root ** mr.k == f
        assert is_closed_homogeneous(mr.root).closed


# -- exact linear algebra ----------------------------------------------


def test_poly_matrix_rank():
    x, y, z = XYZ.gens()
    assert poly_matrix_rank([(x, y), (z, x)]) == 2
    assert poly_matrix_rank([(x, y), (2 * x, 2 * y)]) == 1
    assert poly_matrix_rank([(XYZ.zero(), XYZ.zero())]) == 0


def test_jacobian_dependence():
    x, y, z = XYZ.gens()
    assert jacobian_dependence([x ** 2, y ** 2, x ** 2 + y ** 2])
    assert jacobian_dependence([x + y, (x + y) ** 2])
    assert not jacobian_dependence([x, y, z])
    assert not jacobian_dependence([x, y ** 2])


def test_rational_nullspace():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = rational_nullspace([[Fraction(v) for v in r] for r in rows], 3)
    assert len(basis) == 2
    for vec in basis:
        assert sum(a * b for a, b in zip(rows[0], vec)) == 0
    full = rational_nullspace([[Fraction(1), Fraction(0)],
                               [Fraction(0), Fraction(1)]], 2)
    assert full == []


# -- centers ------------------------------------------------------------


def test_center_membership_jacobian():
    spec = make_sl2()
    b = spec.jacobian_bracket()
    ok, _ = center_membership(b, spec.casimir)
    assert ok
    ok, witnesses = center_membership(b, spec.ctx.variable("e"))
    assert not ok and witnesses


def test_center_membership_table():
    spec = make_malcev_splittable()
    ok, _ = center_membership(spec.bracket, spec.casimir)
    assert ok
    ok, witnesses = center_membership(spec.bracket, spec.ctx.variable("h"))
    assert not ok and witnesses


def test_center_membership_in_quotient():
    spec = make_sl2()
    b = spec.jacobian_bracket()
    qctx = QuotientContext.create(b, 1)
    e, f, h = spec.ctx.gens()
    # h^2 + 4ef is 2C: central and even constant in the quotient
    ok, _ = center_membership(b, h ** 2 + 4 * e * f, qctx)
    assert ok
    ok, _ = center_membership(b, h, qctx)
    assert not ok


def test_center_probe_ambient():
    spec = make_sl2()
    probe = center_probe(spec.jacobian_bracket(), 2)
    assert probe.dimension == 2
    assert probe.mode == "ambient"
    basis = {str(p) for p in probe.basis}
    assert "1" in basis
    others = [pp(s, spec.ctx) for s in basis if s != "1"]
    span_check, _ = center_membership(spec.jacobian_bracket(), others[0])
    assert span_check


def test_center_probe_quotient_is_constants():
    spec = make_quadric(2)
    qctx = QuotientContext.create(spec.jacobian_bracket(), 1)
    probe = center_probe(spec.jacobian_bracket(), 3, qctx)
    assert probe.mode == "quotient"
    assert probe.dimension == 1
    assert [str(p) for p in probe.basis] == ["1"]


def test_center_probe_degenerate_form_sees_radical():
    # rank-1 form: the kernel direction x - y is already central upstairs
    ctx = context("x", "y")
    x, y = ctx.gens()
    spec = make_nlie((x + y) ** 2, name="rank1")
    probe = center_probe(spec.jacobian_bracket(), 1)
    assert probe.dimension == 2  # constants and x - y


# -- saturation ----------------------------------------------------------


def quadric_quotient(lam=1):
    spec = make_quadric(2)
    return spec, QuotientContext.create(spec.jacobian_bracket(), lam)


def test_saturation_reaches_whole_ring():
    spec, qctx = quadric_quotient()
    x1 = spec.ctx.variable("x1")
    report = saturate_poisson_ideal(qctx, [x1])
    assert report.verdict == "whole-ring"
    assert report.contains_one
    assert report.steps_used > 0
    d = report.to_dict()
    assert d["verdict"] == "whole-ring" and d["lambda"] == "1"


def test_saturation_proper_stable_negative_control():
    ctx = context("x", "y", "z")
    x, y, z = ctx.gens()
    spec = make_nlie((x + y + z) ** 2, name="rank1")
    qctx = QuotientContext.create(spec.jacobian_bracket(), 1)
    report = saturate_poisson_ideal(qctx, [x + y + z - 1])
    assert report.verdict == "proper-stable"
    assert [str(p) for p in report.final_basis] == ["x + y + z - 1"]


def test_saturation_budget_exhaustion_is_reported():
    spec, qctx = quadric_quotient()
    x1 = spec.ctx.variable("x1")
    report = saturate_poisson_ideal(qctx, [x1], step_limit=2)
    assert report.verdict == "budget-exhausted"


def test_saturation_rejects_zero_seeds():
    spec, qctx = quadric_quotient()
    with pytest.raises(ValueError):
        saturate_poisson_ideal(qctx, [spec.casimir - 1])


def test_saturation_round_log():
    spec, qctx = quadric_quotient()
    report = saturate_poisson_ideal(qctx, [spec.ctx.variable("x2")])
    assert report.rounds and all(
        set(r) == {"basis_size", "new_elements"} for r in report.rounds)
