"""Exact polynomial arithmetic, calculus and structure queries."""

import random
from fractions import Fraction

import pytest

from nlie.poly import ContextMismatch, Polynomial, VarContext, context
from nlie.brackets import random_polynomial

XY = context("x", "y")
XYZ = context("x", "y", "z")
X, Y = XY.gens()


def rnd(rng, ctx=XYZ, **kw):
    return random_polynomial(rng, ctx, **kw)


def test_context_basics():
    assert XYZ.nvars == 3
    assert XYZ.index("z") == 2
    assert XYZ.variable("y") == XYZ.gens()[1]
    with pytest.raises(ValueError):
        VarContext(("x", "x"))
    with pytest.raises(KeyError):
        XYZ.index("w")


def test_construction_is_canonical():
    p = X + Y - X
    assert p == Y
    assert p.num_terms() == 1
    assert (X - X).is_zero()
    assert not (X - X).terms


def test_context_mismatch_rejected():
    with pytest.raises(ContextMismatch):
        X + XYZ.variable("x")


def test_scalar_mixing():
    p = 2 * X + 1
    assert p - 1 == 2 * X
    assert p * Fraction(1, 2) == X + Fraction(1, 2)
    assert (p / 2) * 2 == p
    assert 1 - X == -(X - 1)
    with pytest.raises(ZeroDivisionError):
        X / 0


def test_pow():
    p = X + Y
    assert p ** 0 == XY.one()
    assert p ** 3 == p * p * p
    assert (p ** 5).coefficient((2, 3)) == 10
    with pytest.raises(ValueError):
        p ** -1


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(25):
        a, b, c = (rnd(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * XYZ.one() == a
        assert a + XYZ.zero() == a


def test_degrees_and_coefficients():
    p = X ** 2 * Y + 3 * X - Fraction(1, 4)
    assert p.total_degree() == 3
    assert p.degree_in(0) == 2
    assert p.degree_in(1) == 1
    assert p.coefficient((1, 0)) == 3
    assert p.coefficient((5, 5)) == 0
    assert p.constant_value() == Fraction(-1, 4)
    assert XY.zero().total_degree() == -1
    assert p.variables_used() == (0, 1)
    assert (X ** 2).variables_used() == (0,)


def test_partial_product_rule():
    rng = random.Random(11)
    for _ in range(25):
        f, g = rnd(rng), rnd(rng)
        for v in "xyz":
            lhs = (f * g).partial(v)
            assert lhs == f.partial(v) * g + f * g.partial(v)


def test_partial_schwarz():
    rng = random.Random(13)
    for _ in range(25):
        f = rnd(rng, max_degree=4)
        assert f.partial("x").partial("y") == f.partial("y").partial("x")


def test_gradient():
    x, y, z = XYZ.gens()
    grad = (x * y * z).gradient()
    assert grad == (y * z, x * z, x * y)


def test_substitute_composition():
    x, y, z = XYZ.gens()
    f = x ** 2 + y * z
    g = f.substitute({"x": y + z, "y": XYZ.one(), "z": x})
    assert g == (y + z) ** 2 + x
    # unmapped variables carry over by name
    h = f.substitute({"x": 2 * x})
    assert h == 4 * x ** 2 + y * z


def test_substitute_changes_context():
    p = X * Y
    uv = context("u", "v", "w")
    u, v, _ = uv.gens()
    q = p.substitute({"x": u + v, "y": u - v})
    assert q.ctx == uv
    assert q == u ** 2 - v ** 2


def test_substitute_scalar_images():
    p = X ** 2 + 3 * Y
    assert p.substitute({"y": 0}) == X ** 2
    assert p.substitute({"x": 2, "y": Fraction(1, 3)}) == 5


def test_substitute_mixed_contexts_rejected():
    uv = context("u", "v")
    with pytest.raises(ContextMismatch):
        (X * Y).substitute({"x": uv.variable("u"), "y": XYZ.variable("z")})


def test_evaluate():
    p = X ** 2 - Y
    assert p.evaluate([3, 2]) == 7
    assert p.evaluate([Fraction(1, 2), 0]) == Fraction(1, 4)
    with pytest.raises(ValueError):
        p.evaluate([1])


def test_homogeneous_components():
    p = X ** 3 + X * Y + 2 * X + 5
    comps = p.homogeneous_components()
    assert sorted(comps) == [0, 1, 2, 3]
    assert sum(comps.values(), XY.zero()) == p
    assert all(c.is_homogeneous() for c in comps.values())
    assert not p.is_homogeneous()
    assert (X ** 2 + Y ** 2).is_homogeneous()


def test_euler_defect():
    # Euler: x.grad(f) = deg * f exactly when f is homogeneous
    f = X ** 2 * Y
    assert f.euler_defect().is_zero()
    g = X ** 2 + Y
    assert not g.euler_defect().is_zero()
    with pytest.raises(ValueError):
        XY.zero().euler_defect()


def test_str_frozen():
    e, f, h = context("e", "f", "h").gens()
    assert str(2 * e * f + Fraction(1, 2) * h ** 2) == "2*e*f + 1/2*h^2"
    assert str(-X + 1) == "-x + 1"
    assert str(XY.zero()) == "0"
    assert str(X - Fraction(3, 4)) == "x - 3/4"


def test_sorted_terms_grevlex():
    p = X + Y ** 2 + X * Y
    monos = [m for m, _ in p.sorted_terms()]
    assert monos == [(1, 1), (0, 2), (1, 0)]


def test_hash_and_dict_keys():
    a = X + Y
    b = Y + X
    assert hash(a) == hash(b)
    assert len({a: 1, b: 2}) == 1
    assert a == a + 0 and a != a + 1


def test_equality_with_scalars():
    assert XY.constant(3) == 3
    assert XY.zero() == 0
    assert X != 1
