"""Monomial orders, multivariate division and Buchberger's algorithm.

sympy is used as an independent oracle for reduced Groebner bases; it is
a test dependency only.
"""

import random

import pytest
import sympy

from nlie.groebner import (BudgetExhausted, GREVLEX, LEX, MonomialOrder,
                           StepBudget, buchberger, divexact, divide,
                           mono_div, mono_divides, mono_lcm, mono_mul,
                           normal_form, spoly)
from nlie.parser import parse_polynomial
from nlie.poly import context
from nlie.brackets import random_polynomial

XYZ = context("x", "y", "z")


def pp(src, ctx=XYZ):
    return parse_polynomial(src, ctx)


def to_sympy(p):
    return sympy.sympify(str(p).replace("^", "**"))


def test_mono_helpers():
    assert mono_mul((1, 2), (3, 0)) == (4, 2)
    assert mono_div((4, 2), (1, 2)) == (3, 0)
    assert mono_lcm((1, 2), (3, 0)) == (3, 2)
    assert mono_divides((1, 0), (2, 5))
    assert not mono_divides((3, 0), (2, 5))


def test_grevlex_leading_terms():
    ef_h = context("e", "f", "h")
    casimir = pp("1/2*h^2 + 2*e*f", ef_h)
    assert GREVLEX.leading_monomial(casimir) == (1, 1, 0)
    assert GREVLEX.leading_coefficient(casimir) == 2
    # same degree: the monomial with the smaller last exponent leads
    p = pp("x*z + y^2")
    assert GREVLEX.leading_monomial(p) == (0, 2, 0)
    assert LEX.leading_monomial(p) == (1, 0, 1)


def test_order_permutation():
    # significance order (z, y, x) flips both kinds of ties
    flipped_lex = MonomialOrder(kind="lex", perm=(2, 1, 0))
    p = pp("x + z")
    assert LEX.leading_monomial(p) == (1, 0, 0)
    assert flipped_lex.leading_monomial(p) == (0, 0, 1)
    flipped = MonomialOrder(kind="grevlex", perm=(2, 1, 0))
    q = pp("x^2*y + y^2*z")
    assert GREVLEX.leading_monomial(q) == (2, 1, 0)
    assert flipped.leading_monomial(q) == (0, 2, 1)
    with pytest.raises(ValueError):
        MonomialOrder(kind="weird")


def test_monic():
    p = pp("2*x^2 + 4*y")
    assert GREVLEX.monic(p) == pp("x^2 + 2*y")
    assert GREVLEX.monic(XYZ.zero()).is_zero()


def test_divide_identity_and_irreducibility():
    rng = random.Random(31)
    for _ in range(30):
        f = random_polynomial(rng, XYZ, max_degree=4, max_terms=6)
        gs = [random_polynomial(rng, XYZ, max_degree=2, max_terms=3)
              for _ in range(2)]
        qs, r = divide(f, gs, GREVLEX)
        assert sum((q * g for q, g in zip(qs, gs)), XYZ.zero()) + r == f
        lead = [GREVLEX.leading_monomial(g) for g in gs]
        for mono in r.terms:
            assert not any(mono_divides(lm, mono) for lm in lead)


def test_normal_form_frozen():
    assert normal_form(pp("(x + y)^2"), [pp("x + y")]).is_zero()
    assert normal_form(pp("x^2"), [pp("x + y")]) == pp("y^2")


def test_divexact():
    f = pp("(x + 2*y)^3")
    g = pp("x + 2*y")
    assert divexact(f, g, GREVLEX) == pp("(x + 2*y)^2")
    with pytest.raises(ValueError):
        divexact(pp("x^2 + 1"), g, GREVLEX)


def test_spoly_cancels_leads():
    f, g = pp("x^2 + y"), pp("x*y + z")
    s = spoly(f, g, GREVLEX)
    lcm = mono_lcm(GREVLEX.leading_monomial(f), GREVLEX.leading_monomial(g))
    assert GREVLEX.key(GREVLEX.leading_monomial(s)) < GREVLEX.key(lcm)


def sympy_reduced_gb(polys, order):
    xs = sympy.symbols("x y z")
    gb = sympy.groebner([to_sympy(p) for p in polys], *xs,
                        order=order, field=True)
    return {sympy.expand(e) for e in gb.exprs}


@pytest.mark.parametrize("gens,order,order_name", [
    (["x^2 + y", "x*y - 1"], GREVLEX, "grevlex"),
    (["x^2 + y", "x*y - 1"], LEX, "lex"),
    (["x - y", "y^2 - 1"], LEX, "lex"),
    (["x*y - z^2", "y*z - x^2", "x*z - y^2"], GREVLEX, "grevlex"),
    (["x + y + z", "x*y + y*z + x*z", "x*y*z - 1"], GREVLEX, "grevlex"),
])
def test_buchberger_against_sympy(gens, order, order_name):
    ours = buchberger([pp(s) for s in gens], order)
    assert {to_sympy(g) for g in ours} == \
        sympy_reduced_gb([pp(s) for s in gens], order_name)


def test_buchberger_against_sympy_random():
    rng = random.Random(37)
    for _ in range(6):
        gens = [random_polynomial(rng, XYZ, max_degree=2, max_terms=3)
                for _ in range(2)]
        ours = buchberger(gens, GREVLEX)
        assert {to_sympy(g) for g in ours} == sympy_reduced_gb(gens, "grevlex")


def test_reduced_basis_is_order_independent():
    gens = [pp(s) for s in ("x^2 + y", "x*y - 1", "y^2 - x")]
    reference = buchberger(gens, GREVLEX).generators
    rng = random.Random(41)
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled, GREVLEX).generators == reference


def test_spolys_reduce_to_zero():
    gb = buchberger([pp("x*y - z^2"), pp("y*z - x^2")], GREVLEX)
    gens = list(gb)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            assert normal_form(spoly(gens[i], gens[j], GREVLEX),
                               gens, GREVLEX).is_zero()


def test_membership_and_unit_ideal():
    gb = buchberger([pp("x + y")], GREVLEX)
    assert gb.contains(pp("(x + y)^3"))
    assert not gb.contains(pp("x"))
    unit = buchberger([pp("x"), pp("1 - x")], GREVLEX)
    assert unit.contains_one
    assert list(unit) == [XYZ.one()]


def test_budget_exhaustion():
    budget = StepBudget(3)
    f = pp("(x + y + z)^5")
    with pytest.raises(BudgetExhausted):
        divide(f, [pp("x - y")], GREVLEX, budget)
    assert budget.remaining <= 0


def test_basis_reduce_matches_normal_form():
    gb = buchberger([pp("x^2 + y"), pp("x*y - 1")], GREVLEX)
    f = pp("x^3*y + y^3 - x")
    assert gb.reduce(f) == normal_form(f, list(gb), GREVLEX)
