"""Root extraction, center criteria and ideal saturation probes.

The operations here turn structural questions about the algebras into
finite checks:

* kth_root / is_closed_homogeneous / minimal_root_homogeneous decide
  whether a homogeneous polynomial is a proper power, by a triangular
  recursion on coefficients against a distinguished variable followed by
  one exact verification.

* center_membership_* and center_probe decide centrality pointwise
  (2x2 Jacobian minors against C, or brackets against generator tuples)
  and solve for the whole center in bounded degree as an exact linear
  system.

* saturate_poisson_ideal grows an ideal from seeds by alternating
  Groebner normalization with bracketing against generator tuples until
  it stabilizes or swallows 1, with explicit budgets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .groebner import (GREVLEX, BudgetExhausted, GroebnerBasis, MonomialOrder,
                       StepBudget, buchberger, divexact, mono_divides)
from .poly import Polynomial, VarContext, poly_from_terms
from .quotient import QuotientContext


class NotHomogeneous(ValueError):
    """Operation requires a homogeneous polynomial."""


class LeadingVariableError(RuntimeError):
    """No variable exposes a pure power, even after shearing."""


# -- linear algebra helpers ----------------------------------------------

def poly_matrix_rank(rows: Sequence[Sequence[Polynomial]],
                     order: MonomialOrder = GREVLEX) -> int:
    """Rank of a polynomial matrix over the fraction field, by fraction-free
    (Bareiss) elimination with row pivoting."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    ctx = None
    for r in m:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        for p in r:
            ctx = ctx or p.ctx
    assert ctx is not None
    prev: Optional[Polynomial] = None
    rank = 0
    pr = 0
    for col in range(ncols):
        piv = next((r for r in range(pr, nrows) if not m[r][col].is_zero()), None)
        if piv is None:
            continue
        if piv != pr:
            m[pr], m[piv] = m[piv], m[pr]
        for r in range(pr + 1, nrows):
            for c in range(col + 1, ncols):
                num = m[pr][col] * m[r][c] - m[r][col] * m[pr][c]
                m[r][c] = divexact(num, prev, order) if prev is not None else num
            m[r][col] = ctx.zero()
        prev = m[pr][col]
        rank += 1
        pr += 1
        if pr == nrows:
            break
    return rank


def jacobian_dependence(fs: Sequence[Polynomial]) -> bool:
    """True when f_1..f_k are algebraically dependent over Q.

    Criterion: the k x nvars Jacobian matrix has rank < k.  (In
    characteristic zero, dependence is equivalent to the differentials
    being linearly dependent over the function field.)
    """
    if not fs:
        raise ValueError("empty family")
    ctx = fs[0].ctx
    rows = [[f.partial(j) for j in range(ctx.nvars)] for f in fs]
    return poly_matrix_rank(rows) < len(fs)


def rational_nullspace(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of the right nullspace of a rational matrix.

    Basis vectors have their first nonzero entry equal to 1 and come out
    in increasing free-column order, so the result is deterministic.
    """
    m = [row[:] for row in rows]
    nrows = len(m)
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        scale = m[r][col]
        m[r] = [v / scale for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -m[prow][fc]
        basis.append(vec)
    return basis


# -- k-th roots and closedness -------------------------------------------

@dataclass(frozen=True)
class RootResult:
    """Outcome of a k-th root attempt: root and alpha with C = alpha * root^k."""

    k: int
    root: Optional[Polynomial]
    alpha: Optional[Fraction]
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.root is not None


def _univariate_parts(f: Polynomial, j: int) -> Dict[int, Polynomial]:
    """Split f by the power of variable j; values have that power removed."""
    parts: Dict[int, dict] = {}
    for mono, c in f.terms.items():
        s = mono[j]
        stripped = mono[:j] + (0,) + mono[j + 1:]
        parts.setdefault(s, {})[stripped] = c
    return {s: Polynomial(f.ctx, t) for s, t in parts.items()}


def _root_with_leading(c_poly: Polynomial, k: int, j: int) -> RootResult:
    """Root recursion with x_j as the distinguished variable.

    Requires the pure power x_j^deg to appear.  Solves the triangular
    system for the coefficients of a monic-in-x_j candidate, then
    verifies the k-th power exactly; the candidate is forced, so a
    verification failure proves there is no root at all.
    """
    ctx = c_poly.ctx
    big_d = c_poly.total_degree()
    m = big_d // k
    pure = tuple(big_d if t == j else 0 for t in range(ctx.nvars))
    alpha = c_poly.coefficient(pure)
    if alpha == 0:
        raise ValueError("distinguished variable lacks its pure power")
    normalized = c_poly / alpha
    parts = _univariate_parts(normalized, j)
    xj = ctx.variable(j)
    b: Dict[int, Polynomial] = {m: ctx.one()}
    for r in range(m - 1, -1, -1):
        s = m * (k - 1) + r
        upper = ctx.zero()
        for i in range(r + 1, m + 1):
            upper = upper + b[i] * xj ** i
        power = upper ** k
        correction = _univariate_parts(power, j).get(s, ctx.zero())
        target = parts.get(s, ctx.zero())
        b[r] = (target - correction) / k
    candidate = ctx.zero()
    for i, coeff_poly in b.items():
        candidate = candidate + coeff_poly * xj ** i
    if alpha * candidate ** k == c_poly:
        return RootResult(k, candidate, alpha)
    return RootResult(k, None, None,
                      f"forced candidate fails verification for k={k}")


def kth_root(c_poly: Polynomial, k: int) -> RootResult:
    """Decide whether homogeneous C = alpha * c^k and recover monic c.

    The root, when it exists, is unique up to a scalar; the returned one
    is monic in the distinguished variable and alpha absorbs the rest.

    Raises:
        NotHomogeneous: C not homogeneous or zero.
        ValueError: k < 1.
        LeadingVariableError: no usable distinguished variable even after
            shearing x_i -> x_i + t*x_j, t in {1,2,3}.
    """
    if c_poly.is_zero() or not c_poly.is_homogeneous():
        raise NotHomogeneous("kth_root needs a nonzero homogeneous polynomial")
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    big_d = c_poly.total_degree()
    if big_d % k != 0:
        return RootResult(k, None, None, f"degree {big_d} not divisible by k={k}")
    ctx = c_poly.ctx
    for j in range(ctx.nvars):
        pure = tuple(big_d if t == j else 0 for t in range(ctx.nvars))
        if c_poly.coefficient(pure) != 0:
            return _root_with_leading(c_poly, k, j)
    # no pure power anywhere: shear toward some variable and undo afterward
    for t in (1, 2, 3):
        for j in range(ctx.nvars):
            point = [Fraction(t)] * ctx.nvars
            point[j] = Fraction(1)
            if c_poly.evaluate(point) == 0:
                continue
            names = ctx.names
            xj = ctx.variable(j)
            fwd = {names[i]: ctx.variable(i) + t * xj
                   for i in range(ctx.nvars) if i != j}
            back = {names[i]: ctx.variable(i) - t * xj
                    for i in range(ctx.nvars) if i != j}
            sheared = c_poly.substitute(fwd)
            res = _root_with_leading(sheared, k, j)
            if not res.found:
                return RootResult(k, None, None, res.reason)
            root = res.root.substitute(back)
            assert res.alpha is not None
            if res.alpha * root ** k == c_poly:
                return RootResult(k, root, res.alpha)
            return RootResult(k, None, None, "unsheared candidate fails verification")
    raise LeadingVariableError(
        "no variable exposes a pure power, shears t=1,2,3 included")


def _divisors_desc(n: int) -> List[int]:
    return [k for k in range(n, 1, -1) if n % k == 0]


@dataclass(frozen=True)
class ClosednessReport:
    closed: bool
    witness_k: Optional[int] = None
    witness_root: Optional[Polynomial] = None


def is_closed_homogeneous(c_poly: Polynomial) -> ClosednessReport:
    """Closed = not a proper power.  Witness is the smallest-degree root.

    Divisors of deg C are tried from the largest down, so the first hit
    is the smallest root; degree-one polynomials are closed outright.
    """
    if c_poly.is_zero() or not c_poly.is_homogeneous():
        raise NotHomogeneous("closedness needs a nonzero homogeneous polynomial")
    for k in _divisors_desc(c_poly.total_degree()):
        res = kth_root(c_poly, k)
        if res.found:
            return ClosednessReport(False, k, res.root)
    return ClosednessReport(True)


@dataclass(frozen=True)
class MinimalRoot:
    root: Polynomial
    k: int
    alpha: Fraction
    was_closed: bool


def minimal_root_homogeneous(c_poly: Polynomial,
                             order: MonomialOrder = GREVLEX) -> MinimalRoot:
    """Smallest-degree c with C = alpha * c^k, k maximal; c is closed.

    A closed C comes back monic (leading coefficient under `order`
    normalized to one) with k = 1.
    """
    if c_poly.is_zero() or not c_poly.is_homogeneous():
        raise NotHomogeneous("minimal root needs a nonzero homogeneous polynomial")
    for k in _divisors_desc(c_poly.total_degree()):
        res = kth_root(c_poly, k)
        if res.found:
            assert res.root is not None and res.alpha is not None
            return MinimalRoot(res.root, k, res.alpha, was_closed=False)
    lc = order.leading_coefficient(c_poly)
    return MinimalRoot(c_poly / lc, 1, lc, was_closed=True)


# -- center criteria ------------------------------------------------------

def center_membership_jacobian(bracket, f: Polynomial,
                               qctx: Optional[QuotientContext] = None
                               ) -> Tuple[bool, List[Tuple[int, int, Polynomial]]]:
    """Centrality of f for a Jacobian bracket via 2x2 minors.

    f is central iff every minor df/dx_i * dC/dx_j - df/dx_j * dC/dx_i
    vanishes (reduced in the quotient when qctx is given).  Returns the
    verdict and the offending (i, j, minor) triples.
    """
    c_poly = bracket.casimir
    ctx = c_poly.ctx
    if f.ctx != ctx:
        raise ValueError("f from the wrong context")
    df = f.gradient()
    dc = c_poly.gradient()
    witnesses = []
    for i in range(ctx.nvars):
        for j in range(i + 1, ctx.nvars):
            minor = df[i] * dc[j] - df[j] * dc[i]
            if qctx is not None:
                minor = qctx.reduce(minor)
            if not minor.is_zero():
                witnesses.append((i, j, minor))
    return (not witnesses), witnesses


def center_membership_table(bracket, f: Polynomial,
                            qctx: Optional[QuotientContext] = None
                            ) -> Tuple[bool, List[Tuple[Tuple[str, ...], Polynomial]]]:
    """Centrality of f for a table bracket via generator tuples.

    By the derivation property it is enough that the bracket of f with
    every increasing (n-1)-tuple of generators vanishes.
    """
    ctx = bracket.ctx
    if f.ctx != ctx:
        raise ValueError("f from the wrong context")
    gens = ctx.gens()
    witnesses = []
    for idxs in itertools.combinations(range(ctx.nvars), bracket.arity - 1):
        args = [gens[i] for i in idxs] + [f]
        val = bracket(*args)
        if qctx is not None:
            val = qctx.reduce(val)
        if not val.is_zero():
            witnesses.append((tuple(ctx.names[i] for i in idxs), val))
    return (not witnesses), witnesses


def center_membership(bracket, f: Polynomial,
                      qctx: Optional[QuotientContext] = None):
    """Dispatch on the bracket kind."""
    if hasattr(bracket, "casimir"):
        return center_membership_jacobian(bracket, f, qctx)
    return center_membership_table(bracket, f, qctx)


def _monomials_up_to(ctx: VarContext, max_degree: int) -> List[Tuple[int, ...]]:
    monos = []

    def rec(prefix: List[int], remaining: int, pos: int) -> None:
        if pos == ctx.nvars:
            monos.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, pos + 1)

    rec([], max_degree, 0)
    monos.sort(key=GREVLEX.key)
    return monos


@dataclass(frozen=True)
class CenterProbeReport:
    mode: str  # "ambient" | "quotient"
    max_degree: int
    dimension: int
    basis: Tuple[Polynomial, ...]

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "max_degree": self.max_degree,
            "dimension": self.dimension,
            "basis": [str(p) for p in self.basis],
        }


def center_probe(bracket, max_degree: int,
                 qctx: Optional[QuotientContext] = None) -> CenterProbeReport:
    """Solve for all central elements of degree <= max_degree exactly.

    A general element is parametrized over the monomials of bounded
    degree, in quotient mode over normal-form monomials only (otherwise
    C - lambda itself would pollute the answer).  Centrality against
    every increasing (n-1)-tuple of generators gives a rational linear
    system; its nullspace is returned as polynomials.
    """
    ctx = bracket.ctx
    monos = _monomials_up_to(ctx, max_degree)
    if qctx is not None:
        lead = qctx.modulus.leading_monomials()
        monos = [m for m in monos if not any(mono_divides(l, m) for l in lead)]
    gens = ctx.gens()
    columns: List[Polynomial] = []
    for mono in monos:
        columns.append(poly_from_terms(ctx, [(mono, 1)]))

    rows: List[List[Fraction]] = []
    for idxs in itertools.combinations(range(ctx.nvars), bracket.arity - 1):
        head = [gens[i] for i in idxs]
        images = []
        out_monos = set()
        for col in columns:
            val = bracket(*head, col)
            if qctx is not None:
                val = qctx.reduce(val)
            images.append(val)
            out_monos.update(val.terms)
        for om in sorted(out_monos, key=GREVLEX.key):
            rows.append([img.coefficient(om) for img in images])

    null = rational_nullspace(rows, len(columns))
    basis = []
    for vec in null:
        basis.append(poly_from_terms(
            ctx, [(mono, q) for mono, q in zip(monos, vec) if q != 0]))
    mode = "quotient" if qctx is not None else "ambient"
    return CenterProbeReport(mode, max_degree, len(basis), tuple(basis))


# -- saturation ------------------------------------------------------------

@dataclass
class SaturationReport:
    """Trace of one saturation run."""

    seeds: Tuple[Polynomial, ...]
    lam: Fraction
    verdict: str  # "whole-ring" | "proper-stable" | "budget-exhausted"
    rounds: List[dict] = field(default_factory=list)
    final_basis: Tuple[Polynomial, ...] = ()
    steps_used: int = 0

    @property
    def contains_one(self) -> bool:
        return self.verdict == "whole-ring"

    def to_dict(self) -> dict:
        return {
            "seeds": [str(s) for s in self.seeds],
            "lambda": str(self.lam),
            "verdict": self.verdict,
            "rounds": self.rounds,
            "final_basis": [str(p) for p in self.final_basis],
            "steps_used": self.steps_used,
        }


def saturate_poisson_ideal(qctx: QuotientContext, seeds: Sequence[Polynomial],
                           max_rounds: int = 25,
                           step_limit: int = 100_000) -> SaturationReport:
    """Close the ideal generated by seeds + (C - lambda) under the bracket.

    Each round reduces every bracket of a basis element against every
    increasing (n-1)-tuple of generators; nonzero normal forms join the
    ideal and the Groebner basis is recomputed.  Stops with verdict
    "whole-ring" once 1 appears, "proper-stable" once a full round adds
    nothing (confirmed by one further round), or "budget-exhausted" when
    the round or step budget runs out.

    Raises:
        QuotientError via ValueError: if every seed is 0 in the quotient.
    """
    bracket = qctx.bracket
    ctx = bracket.ctx
    if not seeds:
        raise ValueError("need at least one seed")
    for s in seeds:
        if s.ctx != ctx:
            raise ValueError("seed from the wrong context")
    if all(qctx.is_zero(s) for s in seeds):
        raise ValueError("all seeds are zero in the quotient")

    budget = StepBudget(step_limit)
    gens = ctx.gens()
    tuples = list(itertools.combinations(range(ctx.nvars), bracket.arity - 1))
    report = SaturationReport(tuple(seeds), qctx.lam, "budget-exhausted")
    current: List[Polynomial] = list(seeds) + [qctx.casimir - qctx.lam]
    try:
        basis = buchberger(current, qctx.order, budget)
        empty_rounds = 0
        while len(report.rounds) < max_rounds:
            if basis.contains_one:
                report.verdict = "whole-ring"
                break
            fresh: List[Polynomial] = []
            seen = set()
            for g in basis.generators:
                for idxs in tuples:
                    val = bracket(*(gens[i] for i in idxs), g)
                    red = basis.reduce(val, budget)
                    if red.is_zero():
                        continue
                    red = qctx.order.monic(red)
                    if red not in seen:
                        seen.add(red)
                        fresh.append(red)
            report.rounds.append({"basis_size": len(basis),
                                  "new_elements": len(fresh)})
            if not fresh:
                empty_rounds += 1
                if empty_rounds >= 2:  # stability re-verified once
                    report.verdict = "proper-stable"
                    break
                continue
            empty_rounds = 0
            basis = buchberger(list(basis.generators) + fresh, qctx.order, budget)
        report.final_basis = basis.generators
    except BudgetExhausted:
        report.verdict = "budget-exhausted"
    report.steps_used = budget.used
    return report
