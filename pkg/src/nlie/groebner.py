"""Monomial orders, multivariate division and reduced Groebner bases.

Everything here is deterministic: given the same generators and order,
the same reduced basis comes back in the same sequence.  Long
computations are metered by an explicit reduction-step budget and fail
loudly with BudgetExhausted, never silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .poly import Monomial, Polynomial, VarContext, _raw

DEFAULT_BUDGET = 100_000


class BudgetExhausted(RuntimeError):
    """Raised when a computation runs out of reduction steps."""


class StepBudget:
    """Mutable counter of remaining reduction steps, shared across calls."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise BudgetExhausted(
                f"reduction budget exhausted ({self.used} > {self.limit} steps)")

    @property
    def remaining(self) -> int:
        return self.limit - self.used


# -- exponent tuple helpers --------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: 'grevlex' (default) or 'lex'.

    `perm` optionally permutes variable significance: perm[0] is the most
    significant variable index.  None means context order.
    """

    kind: str = "grevlex"
    perm: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown order kind {self.kind!r}")

    def _permuted(self, mono: Monomial) -> Monomial:
        if self.perm is None:
            return mono
        return tuple(mono[i] for i in self.perm)

    def key(self, mono: Monomial) -> tuple:
        """Sort key; larger key means larger monomial."""
        m = self._permuted(mono)
        if self.kind == "lex":
            return m
        return (sum(m), tuple(-e for e in reversed(m)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def leading_monomial(self, p: Polynomial) -> Monomial:
        if p.is_zero():
            raise ValueError("zero polynomial has no leading monomial")
        return max(p.terms, key=self.key)

    def leading_term(self, p: Polynomial) -> Tuple[Monomial, Fraction]:
        m = self.leading_monomial(p)
        return m, p.terms[m]

    def leading_coefficient(self, p: Polynomial) -> Fraction:
        return self.leading_term(p)[1]

    def monic(self, p: Polynomial) -> Polynomial:
        if p.is_zero():
            return p
        return p / self.leading_coefficient(p)

    def sorted_monomials(self, monos: Iterable[Monomial]) -> List[Monomial]:
        return sorted(monos, key=self.key, reverse=True)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


# -- division -----------------------------------------------------------

def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
           budget: Optional[StepBudget] = None) -> Tuple[List[Polynomial], Polynomial]:
    """Multivariate division of f by an ordered list of divisors.

    Returns (quotients, remainder) with f == sum(q_i * g_i) + r and no
    remainder monomial divisible by any divisor's leading monomial.

    Args:
        f: dividend.
        divisors: nonzero divisors, tried in order at each step.
        order: monomial order for leading terms.
        budget: optional shared step budget; each single-term elimination
            costs one step.

    Raises:
        ValueError: if any divisor is zero.
        BudgetExhausted: if the step budget runs out.
    """
    for g in divisors:
        if g.is_zero():
            raise ValueError("zero divisor in division")
    ctx = f.ctx
    lts = [order.leading_term(g) for g in divisors]
    quotients = [dict() for _ in divisors]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        mono = max(work, key=order.key)
        coeff = work.pop(mono)
        for i, (lm, lc) in enumerate(lts):
            if mono_divides(lm, mono):
                if budget is not None:
                    budget.spend()
                shift = mono_div(mono, lm)
                q = coeff / lc
                qt = quotients[i]
                s = qt.get(shift, Fraction(0)) + q
                if s:
                    qt[shift] = s
                else:
                    qt.pop(shift, None)
                for gm, gc in divisors[i].terms.items():
                    if gm == lm:
                        continue
                    tm = mono_mul(shift, gm)
                    s = work.get(tm, Fraction(0)) - q * gc
                    if s:
                        work[tm] = s
                    else:
                        work.pop(tm, None)
                break
        else:
            remainder[mono] = coeff
    return [_raw(ctx, q) for q in quotients], _raw(ctx, remainder)


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
                budget: Optional[StepBudget] = None) -> Polynomial:
    """Remainder of f on division by divisors."""
    return divide(f, divisors, order, budget)[1]


def divexact(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Exact quotient f / g; raises ValueError when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    qs, r = divide(f, [g], order)
    if not r.is_zero():
        raise ValueError("divexact: division not exact")
    return qs[0]


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial of f and g."""
    mf, cf = order.leading_term(f)
    mg, cg = order.leading_term(g)
    l = mono_lcm(mf, mg)
    uf = _raw(f.ctx, {mono_div(l, mf): 1 / cf})
    ug = _raw(g.ctx, {mono_div(l, mg): 1 / cg})
    return uf * f - ug * g


# -- Buchberger ---------------------------------------------------------

def _update_pairs(basis: List[Polynomial], pairs: List[Tuple[int, int]],
                  f: Polynomial, order: MonomialOrder) -> None:
    """Gebauer-Moller pair update: append f to basis, prune and extend pairs.

    Mutates basis and pairs in place.
    """
    lmf = order.leading_monomial(f)
    lms = [order.leading_monomial(g) for g in basis]

    kept = []
    for (i, j) in pairs:
        lcm_ij = mono_lcm(lms[i], lms[j])
        if (not mono_divides(lmf, lcm_ij)
                or mono_lcm(lms[i], lmf) == lcm_ij
                or mono_lcm(lms[j], lmf) == lcm_ij):
            kept.append((i, j))
    pairs[:] = kept

    new_idx = len(basis)
    cand = [(mono_lcm(lm, lmf), i) for i, lm in enumerate(lms)]
    cand.sort(key=lambda t: order.key(t[0]))
    minimal: List[Tuple[Monomial, List[int]]] = []
    for lcm_m, i in cand:
        covered = False
        for prev, members in minimal:
            if prev == lcm_m:
                members.append(i)
                covered = True
                break
            if mono_divides(prev, lcm_m):
                covered = True
                break
        if not covered:
            minimal.append((lcm_m, [i]))
    for lcm_m, members in minimal:
        # Buchberger's first criterion: skip classes containing a coprime pair.
        if any(lcm_m == mono_mul(lms[i], lmf) for i in members):
            continue
        pairs.append((min(members), new_idx))

    basis.append(f)


def _minimalize(basis: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    out: List[Polynomial] = []
    for g in sorted(basis, key=lambda p: order.key(order.leading_monomial(p))):
        lm = order.leading_monomial(g)
        if all(not mono_divides(order.leading_monomial(h), lm) for h in out):
            out.append(g)
    return out


def _interreduce(basis: List[Polynomial], order: MonomialOrder,
                 budget: Optional[StepBudget]) -> List[Polynomial]:
    out: List[Polynomial] = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        _, r = divide(g, others, order, budget)
        if not r.is_zero():
            out.append(order.monic(r))
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis together with its order.

    Generators are monic, mutually reduced and sorted by increasing
    leading monomial; this form is unique for the ideal and order.
    """

    generators: Tuple[Polynomial, ...]
    order: MonomialOrder

    @property
    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def reduce(self, f: Polynomial, budget: Optional[StepBudget] = None) -> Polynomial:
        """Unique normal form of f modulo the ideal."""
        return normal_form(f, self.generators, self.order, budget)

    def contains(self, f: Polynomial, budget: Optional[StepBudget] = None) -> bool:
        return self.reduce(f, budget).is_zero()

    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(self.order.leading_monomial(g) for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               budget: Optional[StepBudget] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Pair management follows Gebauer-Moller; pair selection is the normal
    strategy (smallest lcm in the order).  The step budget, defaulting to
    DEFAULT_BUDGET, bounds single-term reductions across the whole run.

    Raises:
        BudgetExhausted: when the budget runs out; no partial basis is
            returned.
    """
    if budget is None:
        budget = StepBudget(DEFAULT_BUDGET)
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        raise ValueError("no nonzero generators")
    ctx = nonzero[0].ctx
    for g in nonzero:
        if g.ctx != ctx:
            raise ValueError("generators from different contexts")

    basis: List[Polynomial] = []
    pairs: List[Tuple[int, int]] = []
    for g in nonzero:
        _, r = divide(g, basis, order, budget) if basis else ([], g)
        if not r.is_zero():
            _update_pairs(basis, pairs, order.monic(r), order)

    while pairs:
        pairs.sort(key=lambda ij: order.key(
            mono_lcm(order.leading_monomial(basis[ij[0]]),
                     order.leading_monomial(basis[ij[1]]))))
        i, j = pairs.pop(0)
        s = spoly(basis[i], basis[j], order)
        _, r = divide(s, basis, order, budget)
        if not r.is_zero():
            _update_pairs(basis, pairs, order.monic(r), order)

    reduced = _interreduce(_minimalize(basis, order), order, budget)
    reduced.sort(key=lambda p: order.key(order.leading_monomial(p)))
    return GroebnerBasis(tuple(reduced), order)
