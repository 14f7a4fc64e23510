"""Brute-force validators, independent of every character-sum formula.

``count_points_naive`` literally sums fiber sizes of y^ell over the values
x^2 + ax + b, one x at a time (vectorized but definitional), and adds the
single place at infinity.  ``diagonal_count_naive`` counts solutions of
diagonal equations by folding value histograms.  ``lpoly_from_counts``
feeds oracle counts through the same Newton recursion the formula side
uses, so any disagreement isolates the trace data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, ZeroElement, ZeroRhs
from .frobenius import CurveParams
from .gf import DEFAULT_TABLE_CAP, FieldSpec, build_field, embed
from .lfunc import LPoly, lpoly_from_s, trivial_lpoly


@dataclass(frozen=True)
class OracleBudget:
    max_elements: int = 1 << 26
    max_pairs: int = 1 << 26

    def __post_init__(self):
        if self.max_elements < 1 or self.max_pairs < 1:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = OracleBudget()


def _extension(curve: CurveParams, t: int, budget: OracleBudget) -> FieldSpec:
    base = curve.base_field
    cap = max(budget.max_elements, DEFAULT_TABLE_CAP)
    if t == 1:
        return base
    return build_field(base.p, base.d * t, table_cap=cap)


def count_points_naive(curve: CurveParams, t: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """1 + #{(x, y) in F_{q^t}^2 : y^ell = x^2 + ax + b}.

    The +1 is the unique totally ramified place at infinity.  Cost is one
    pass over F_{q^t} against a precomputed ell-th power fiber table.
    """
    Q = curve.q**t
    if Q > budget.max_elements:
        raise BudgetExceeded(f"q^t = {Q} exceeds max_elements = {budget.max_elements}")
    field = _extension(curve, t, budget)
    base = curve.base_field
    a = curve.a if field is base else embed(base, field, curve.a)
    b = curve.b if field is base else embed(base, field, curve.b)

    tables = field.tables()
    fiber = tables.fiber_counts(curve.ell)
    n = Q - 1
    b_code = b.code

    affine = int(fiber[b_code])  # the x = 0 column
    if not a:
        # values x^2 + b through the add-b permutation, one gather each
        perm_b = tables.perm_add_const(b_code)
        affine += int(fiber[perm_b[tables.square_codes()]].sum())
        return affine + 1
    la = field.dlog(a)
    chunk = 1 << 20
    for lo in range(0, n, chunk):
        ks = np.arange(lo, min(lo + chunk, n), dtype=np.int64)
        vals = tables.exp[(2 * ks) % n]  # x^2 for x = gen^k
        vals = tables.add_codes(vals, tables.exp[(ks + la) % n])
        vals = tables.add_const(vals, b_code)
        affine += int(fiber[vals].sum())
    return affine + 1


def diagonal_count_naive(field: FieldSpec, terms, rhs, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Solutions of sum_i coeff_i * x_i^(k_i) = rhs by exhaustive folding.

    ``terms`` is a sequence of (coefficient, exponent) pairs; the right
    hand side must be nonzero.
    """
    rhs = field.coerce(rhs)
    if not rhs:
        raise ZeroRhs("rhs must be a unit")
    terms = list(terms)
    if not terms:
        raise ValueError("need at least one term")
    if field.order ** len(terms) > budget.max_pairs:
        raise BudgetExceeded(
            f"{field.order}^{len(terms)} exceeds max_pairs = {budget.max_pairs}")

    tables = field.tables()
    Q = field.order
    n = Q - 1

    def term_histogram(coeff, k):
        coeff = field.coerce(coeff)
        if not coeff:
            raise ZeroElement("diagonal coefficients must be units")
        lc = field.dlog(coeff)
        ks = np.arange(n, dtype=np.int64)
        values = tables.exp[(ks * k + lc) % n]
        hist = np.bincount(values, minlength=Q)
        hist[0] += 1  # x_i = 0 contributes value 0
        return hist

    hists = [term_histogram(c, k) for c, k in terms]
    acc = hists[0]
    for hist in hists[1:-1]:
        folded = np.zeros(Q, dtype=np.int64)
        all_codes = np.arange(Q, dtype=np.int64)
        for v in np.nonzero(acc)[0]:
            folded[tables.add_const(all_codes, int(v))] += acc[v] * hist
        acc = folded
    if len(hists) == 1:
        return int(acc[rhs.code])
    # last fold evaluated only at rhs: sum_v acc[v] * last[rhs - v]
    last = hists[-1]
    all_codes = np.arange(Q, dtype=np.int64)
    rhs_minus = tables.add_const(tables.neg_codes(all_codes), rhs.code)
    return int(np.dot(acc, last[rhs_minus]))


def lpoly_from_counts(curve: CurveParams, budget: OracleBudget = DEFAULT_BUDGET) -> LPoly:
    """L-polynomial rebuilt purely from naive counts N_1..N_g."""
    g = curve.genus
    if g == 0:
        return trivial_lpoly(curve.q)
    if curve.q**g > budget.max_elements:
        raise BudgetExceeded(
            f"q^g = {curve.q**g} exceeds max_elements = {budget.max_elements}")
    S = [count_points_naive(curve, t, budget) - (curve.q**t + 1) for t in range(1, g + 1)]
    return lpoly_from_s(S, g, curve.q)
