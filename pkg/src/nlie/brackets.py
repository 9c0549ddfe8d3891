"""n-ary brackets on polynomial algebras and identity verification.

Two bracket constructions are provided:

* JacobianBracket: the n-ary bracket on K[x_1..x_{n+1}] given by the
  Jacobian determinant {f_1,...,f_n} = det d(f_1,...,f_n,C)/dx with a
  fixed last row polynomial C.

* TableBracket: the unique extension of a structure-constant table on
  generators to a multiderivation of the polynomial algebra,
  {f_1,...,f_n} = sum over increasing index tuples of
  det(df_a/de_{i_b}) * [e_{i_1},...,e_{i_n}].

Identity verifiers run a deterministic generator-tuple phase (complete
for multilinear alternating identities) plus a seeded random-polynomial
phase, and return IdentityReport records either way; a report with
failures is a finding, not an exception.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import Monomial, Polynomial, VarContext

MAX_STORED_FAILURES = 12


class ArityMismatch(ValueError):
    """Raised when a bracket receives the wrong number of arguments."""


def poly_det(rows: Sequence[Sequence[Polynomial]], ctx: VarContext) -> Polynomial:
    """Determinant of a square matrix of polynomials.

    Laplace expansion along rows with memoization on the surviving
    column set; fine for the small matrices brackets produce.
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ctx.one()
    memo: Dict[Tuple[int, ...], Polynomial] = {}

    def rec(cols: Tuple[int, ...]) -> Polynomial:
        r = n - len(cols)
        if not cols:
            return ctx.one()
        got = memo.get(cols)
        if got is not None:
            return got
        acc = ctx.zero()
        for k, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            term = entry * rec(cols[:k] + cols[k + 1:])
            acc = acc + term if k % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return rec(tuple(range(n)))


def jacobian(fs: Sequence[Polynomial]) -> Polynomial:
    """Jacobian determinant of nvars polynomials in their context."""
    if not fs:
        raise ValueError("jacobian of an empty family")
    ctx = fs[0].ctx
    for f in fs:
        if f.ctx != ctx:
            raise ValueError("jacobian arguments from different contexts")
    if len(fs) != ctx.nvars:
        raise ValueError(
            f"jacobian needs {ctx.nvars} polynomials, got {len(fs)}")
    rows = [[f.partial(j) for j in range(ctx.nvars)] for f in fs]
    return poly_det(rows, ctx)


@dataclass(frozen=True)
class JacobianBracket:
    """n-ary Jacobian bracket {f_1..f_n} = J(f_1,...,f_n,C) on n+1 variables."""

    casimir: Polynomial

    @property
    def ctx(self) -> VarContext:
        return self.casimir.ctx

    @property
    def arity(self) -> int:
        return self.ctx.nvars - 1

    def __call__(self, *fs: Polynomial) -> Polynomial:
        if len(fs) != self.arity:
            raise ArityMismatch(f"bracket takes {self.arity} arguments, got {len(fs)}")
        for f in fs:
            if f.ctx != self.ctx:
                raise ValueError("bracket argument from the wrong context")
        return jacobian(list(fs) + [self.casimir])


@dataclass(frozen=True)
class TableBracket:
    """Multiderivation extension of a structure-constant table.

    `table` provides .ctx, .arity and .entry(increasing index tuple).
    """

    table: object

    @property
    def ctx(self) -> VarContext:
        return self.table.ctx

    @property
    def arity(self) -> int:
        return self.table.arity

    def __call__(self, *fs: Polynomial) -> Polynomial:
        n = self.arity
        if len(fs) != n:
            raise ArityMismatch(f"bracket takes {n} arguments, got {len(fs)}")
        ctx = self.ctx
        for f in fs:
            if f.ctx != ctx:
                raise ValueError("bracket argument from the wrong context")
        nv = ctx.nvars
        partials = [[f.partial(j) for j in range(nv)] for f in fs]
        acc = ctx.zero()
        for idxs in itertools.combinations(range(nv), n):
            const = self.table.entry(idxs)
            if const.is_zero():
                continue
            rows = [[partials[a][j] for j in idxs] for a in range(n)]
            minor = poly_det(rows, ctx)
            if not minor.is_zero():
                acc = acc + minor * const
        return acc


Bracket = object  # either JacobianBracket or TableBracket; both are callable


def ternary_jacobian(bracket, a: Polynomial, b: Polynomial, c: Polynomial) -> Polynomial:
    """J(a,b,c) = [[a,b],c] - [[a,c],b] - [a,[b,c]] for a binary bracket."""
    if bracket.arity != 2:
        raise ArityMismatch("ternary Jacobian needs a binary bracket")
    return (bracket(bracket(a, b), c)
            - bracket(bracket(a, c), b)
            - bracket(a, bracket(b, c)))


# -- random inputs ------------------------------------------------------

def random_polynomial(rng: random.Random, ctx: VarContext, max_degree: int = 3,
                      coeff_bound: int = 9, max_terms: int = 4,
                      nonzero: bool = True) -> Polynomial:
    """Sparse random polynomial with small integer coefficients.

    Degrees are drawn uniformly from 0..max_degree per term; coefficients
    from [-coeff_bound, coeff_bound] excluding 0.  Deterministic given the
    rng state.
    """
    for _ in range(50):
        terms: Dict[Monomial, Fraction] = {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(0, max_degree)
            mono = [0] * ctx.nvars
            for _ in range(d):
                mono[rng.randrange(ctx.nvars)] += 1
            c = rng.randint(1, coeff_bound) * rng.choice((1, -1))
            key = tuple(mono)
            if key in terms:
                continue
            terms[key] = Fraction(c)
        p = Polynomial(ctx, terms)
        if not (nonzero and p.is_zero()):
            return p
    raise RuntimeError("could not generate a nonzero random polynomial")


def random_homogeneous(rng: random.Random, ctx: VarContext, degree: int,
                       coeff_bound: int = 9, max_terms: int = 4) -> Polynomial:
    """Nonzero random homogeneous polynomial of exact total degree."""
    for _ in range(50):
        terms: Dict[Monomial, Fraction] = {}
        for _ in range(rng.randint(1, max_terms)):
            mono = [0] * ctx.nvars
            for _ in range(degree):
                mono[rng.randrange(ctx.nvars)] += 1
            c = rng.randint(1, coeff_bound) * rng.choice((1, -1))
            key = tuple(mono)
            if key in terms:
                continue
            terms[key] = Fraction(c)
        p = Polynomial(ctx, terms)
        if not p.is_zero():
            return p
    raise RuntimeError("could not generate a nonzero homogeneous polynomial")


# -- reports ------------------------------------------------------------

@dataclass
class IdentityReport:
    """Outcome of checking one identity on one bracket."""

    identity: str
    arity: int
    trials: int
    failure_count: int
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "arity": self.arity,
            "trials": self.trials,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "pass": self.passed,
        }


class _Recorder:
    def __init__(self, identity: str, arity: int):
        self.identity = identity
        self.arity = arity
        self.trials = 0
        self.failure_count = 0
        self.failures: List[dict] = []

    def check(self, defect: Polynomial, inputs: Sequence[Polynomial], note: str = "") -> None:
        self.trials += 1
        if defect.is_zero():
            return
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            entry = {"inputs": [str(p) for p in inputs], "defect": str(defect)}
            if note:
                entry["note"] = note
            self.failures.append(entry)

    def report(self) -> IdentityReport:
        return IdentityReport(self.identity, self.arity, self.trials,
                              self.failure_count, self.failures)


def _random_tuple(rng, ctx, k, max_degree, coeff_bound):
    return tuple(random_polynomial(rng, ctx, max_degree, coeff_bound) for _ in range(k))


def verify_skew(bracket, trials: int = 100, seed: int = 0, max_degree: int = 3,
                coeff_bound: int = 9) -> IdentityReport:
    """Alternation: repeated arguments kill the bracket, transpositions flip sign."""
    n, ctx = bracket.arity, bracket.ctx
    rec = _Recorder("skew", n)
    gens = ctx.gens()
    # generator phase: every duplication of an (n-1)-subset
    if n >= 2:
        for base in itertools.combinations(range(ctx.nvars), n - 1):
            for dup in base:
                args = [gens[i] for i in base] + [gens[dup]]
                rec.check(bracket(*args), args, note="duplicate generator")
    rng = random.Random(seed)
    for _ in range(trials):
        fs = _random_tuple(rng, ctx, n, max_degree, coeff_bound)
        if n >= 2:
            a, b = rng.sample(range(n), 2)
            swapped = list(fs)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            rec.check(bracket(*fs) + bracket(*swapped), fs, note=f"swap {a},{b}")
            dup = list(fs)
            dup[b] = dup[a]
            rec.check(bracket(*dup), dup, note="duplicate slot")
        else:
            rec.check(ctx.zero(), fs, note="arity 1, nothing to swap")
    return rec.report()


def verify_leibniz(bracket, trials: int = 100, seed: int = 0, max_degree: int = 3,
                   coeff_bound: int = 9) -> IdentityReport:
    """Derivation in each slot: {..., g*h, ...} = g{...,h,...} + {...,g,...}h."""
    n, ctx = bracket.arity, bracket.ctx
    rec = _Recorder("leibniz", n)
    rng = random.Random(seed)
    for _ in range(trials):
        fs = list(_random_tuple(rng, ctx, n, max_degree, coeff_bound))
        g = random_polynomial(rng, ctx, max_degree, coeff_bound)
        h = random_polynomial(rng, ctx, max_degree, coeff_bound)
        slot = rng.randrange(n)
        with_prod = list(fs)
        with_prod[slot] = g * h
        with_g = list(fs)
        with_g[slot] = g
        with_h = list(fs)
        with_h[slot] = h
        defect = bracket(*with_prod) - g * bracket(*with_h) - bracket(*with_g) * h
        rec.check(defect, [g, h] + fs, note=f"slot {slot}")
    return rec.report()


def _filippov_defect(bracket, us, vs) -> Polynomial:
    lhs = bracket(bracket(*us), *vs)
    rhs = None
    for i in range(len(us)):
        inner = bracket(us[i], *vs)
        args = list(us)
        args[i] = inner
        term = bracket(*args)
        rhs = term if rhs is None else rhs + term
    return lhs - rhs


def verify_filippov(bracket, trials: int = 100, seed: int = 0, max_degree: int = 3,
                    coeff_bound: int = 9, generator_phase: bool = True) -> IdentityReport:
    """Fundamental identity: [[u_1..u_n],v_..] = sum_i [u_1..[u_i,v_..]..u_n].

    The generator phase over increasing index tuples is complete for the
    degree-one part (the identity is multilinear and alternating in the
    u block and in the v block); random trials probe the full algebra.
    """
    n, ctx = bracket.arity, bracket.ctx
    rec = _Recorder("filippov", n)
    gens = ctx.gens()
    if generator_phase:
        for ui in itertools.combinations(range(ctx.nvars), n):
            for vi in itertools.combinations(range(ctx.nvars), n - 1):
                us = [gens[i] for i in ui]
                vs = [gens[i] for i in vi]
                rec.check(_filippov_defect(bracket, us, vs), us + vs,
                          note="generator tuple")
    rng = random.Random(seed)
    for _ in range(trials):
        us = _random_tuple(rng, ctx, n, max_degree, coeff_bound)
        vs = _random_tuple(rng, ctx, n - 1, max_degree, coeff_bound)
        rec.check(_filippov_defect(bracket, us, vs), list(us) + list(vs))
    return rec.report()


def _strong_defect(bracket, us, vs) -> Polynomial:
    # sum_{i=1}^{n+1} (-1)^i {u_1..u_{n-1}, v_i} * {v_1,..,v_i-hat,..,v_{n+1}}
    acc = None
    for i, v in enumerate(vs):
        rest = vs[:i] + vs[i + 1:]
        term = bracket(*us, v) * bracket(*rest)
        if i % 2 == 0:  # (-1)^i with 1-based i is negative for even 0-based i
            term = -term
        acc = term if acc is None else acc + term
    return acc


def verify_strong(bracket, trials: int = 100, seed: int = 0, max_degree: int = 3,
                  coeff_bound: int = 9, generator_phase: bool = True) -> IdentityReport:
    """Alternating sum of products of brackets over n+1 distinguished arguments.

    With u = (u_1..u_{n-1}) and v = (v_1..v_{n+1}):
    sum_i (-1)^i {u, v_i} {v_1,..,v_i-hat,..,v_{n+1}} = 0.

    Each slot of the sum is a derivation, so the generator phase over
    increasing tuples is complete; random trials cross-check.
    """
    n, ctx = bracket.arity, bracket.ctx
    rec = _Recorder("strong", n)
    gens = ctx.gens()
    if generator_phase:
        for ui in itertools.combinations(range(ctx.nvars), n - 1):
            for vi in itertools.combinations(range(ctx.nvars), n + 1):
                us = tuple(gens[i] for i in ui)
                vs = tuple(gens[i] for i in vi)
                rec.check(_strong_defect(bracket, us, vs), list(us) + list(vs),
                          note="generator tuple")
    rng = random.Random(seed)
    for _ in range(trials):
        us = _random_tuple(rng, ctx, n - 1, max_degree, coeff_bound)
        vs = _random_tuple(rng, ctx, n + 1, max_degree, coeff_bound)
        rec.check(_strong_defect(bracket, us, vs), list(us) + list(vs))
    return rec.report()


def verify_malcev(bracket, trials: int = 100, seed: int = 0,
                  coeff_bound: int = 9) -> IdentityReport:
    """Malcev identity [J(a,b,c),a] = J(a,b,[a,c]) for a binary bracket.

    Checked on all generator triples and on random degree-one elements
    (the identity is quadratic in a, so triples alone do not span it).
    """
    if bracket.arity != 2:
        raise ArityMismatch("Malcev identity needs a binary bracket")
    ctx = bracket.ctx
    rec = _Recorder("malcev", 2)

    def defect(a, b, c):
        return (bracket(ternary_jacobian(bracket, a, b, c), a)
                - ternary_jacobian(bracket, a, b, bracket(a, c)))

    gens = ctx.gens()
    for a, b, c in itertools.product(gens, repeat=3):
        rec.check(defect(a, b, c), (a, b, c), note="generator triple")
    rng = random.Random(seed)
    for _ in range(trials):
        a = random_polynomial(rng, ctx, 1, coeff_bound)
        b = random_polynomial(rng, ctx, 1, coeff_bound)
        c = random_polynomial(rng, ctx, 1, coeff_bound)
        rec.check(defect(a, b, c), (a, b, c))
    return rec.report()


VERIFIERS = {
    "skew": verify_skew,
    "leibniz": verify_leibniz,
    "filippov": verify_filippov,
    "strong": verify_strong,
    "malcev": verify_malcev,
}
