"""L-polynomials: Newton assembly from traces, closed forms, class numbers.

The lower half c_1..c_g comes from the exact recursion
t*c_t = sum_{i=1..t} S_i c_{t-i}; the upper half is filled by the
functional equation c_{2g-i} = q^(g-i) * c_i.  The class number is L(1),
evaluated both directly and through the grouped (q^(g-i)+1) form; the two
must agree exactly.

Division in the recursion is required to be exact.  A remainder means the
supplied S_t are wrong, and the error is fatal by design: rounding here
would silently corrupt class numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    FieldTooLarge,
    GenusZero,
    NonIntegralCoefficient,
    OrderMismatch,
    UnsupportedM,
)
from .frobenius import CurveParams, TraceProfile, multiplicative_order
from .gf import DEFAULT_TABLE_CAP, FieldSpec, field_for_order


@dataclass(frozen=True)
class LPoly:
    """L(u) = sum c_i u^i of degree 2g, with class number L(1)."""

    g: int
    q: int
    coeffs: tuple
    class_number: int

    def __post_init__(self):
        g, q, c = self.g, self.q, self.coeffs
        if len(c) != 2 * g + 1:
            raise ValueError("need 2g+1 coefficients")
        if c[0] != 1:
            raise ValueError("c_0 must be 1")
        for i in range(g + 1):
            if c[2 * g - i] != q ** (g - i) * c[i]:
                raise ValueError(f"functional equation fails at i = {i}")
        if self.class_number != sum(c):
            raise ValueError("class number must equal L(1)")
        if self.class_number < 1:
            raise ValueError("class number must be positive")

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "q": self.q,
            "coeffs": [str(c) for c in self.coeffs],
            "class_number": str(self.class_number),
        }


def trivial_lpoly(q: int) -> LPoly:
    """Genus 0: L(u) = 1 and class number 1."""
    return LPoly(0, q, (1,), 1)


def newton_coeffs(S, g: int):
    """c_0..c_g from power-sum data via t*c_t = sum S_i c_{t-i}, exactly."""
    c = [1]
    for t in range(1, g + 1):
        total = sum(S[i - 1] * c[t - i] for i in range(1, t + 1))
        ct, rem = divmod(total, t)
        if rem:
            raise NonIntegralCoefficient(t)
        c.append(ct)
    return c


def lpoly_from_s(S, g: int, q: int) -> LPoly:
    lower = newton_coeffs(S, g)
    coeffs = list(lower) + [0] * g
    for i in range(g):
        coeffs[2 * g - i] = q ** (g - i) * lower[i]
    h = sum(coeffs)
    return LPoly(g, q, tuple(coeffs), h)


def lpoly_from_profile(profile: TraceProfile, curve: CurveParams) -> LPoly:
    """Assemble L from a trace profile (genus must be positive)."""
    g = curve.genus
    if g == 0:
        raise GenusZero("genus-0 curve has the trivial L-polynomial")
    return lpoly_from_s(profile.S_list, g, curve.q)


def lpoly_for_curve(curve: CurveParams, char_base=None, *, cap: int = DEFAULT_TABLE_CAP) -> LPoly:
    """Full pipeline for one curve, genus 0 included."""
    if curve.genus == 0:
        return trivial_lpoly(curve.q)
    from .frobenius import analyze

    return lpoly_from_profile(analyze(curve, char_base, cap=cap), curve)


def class_number(L: LPoly) -> int:
    """L(1), computed two ways and cross-checked."""
    g, q, c = L.g, L.q, L.coeffs
    direct = sum(c)
    grouped = sum((q ** (g - i) + 1) * c[i] for i in range(g)) + (c[g] if g else 0)
    if g == 0:
        grouped = c[0]
    assert direct == grouped, "class number evaluations disagree"
    return direct


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

def jacobi_constant_coeff_qr(field: FieldSpec, ell: int) -> int:
    """Constant-slot Jacobi coefficient via quadratic-residue counting.

    Counts the squares among {1 - g^(ell*i)} for i = 1..(order-1-ell)/ell
    (the non-identity ell-th powers) and returns 2N - (order-1-ell)/ell.
    Agrees with the zeta^ell slot of the sum = -1 Jacobi representative.
    """
    Q = field.order
    if (Q - 1) % ell:
        raise OrderMismatch(f"{ell} does not divide {Q - 1}")
    tables = field.tables(strict=False)
    if tables is None:
        raise FieldTooLarge(f"order {Q} exceeds the table cap {field.table_cap}")
    M = (Q - 1 - ell) // ell
    one_minus = tables.one_minus_perm()
    N = 0
    chunk = 1 << 22
    for lo in range(1, M + 1, chunk):
        idx = np.arange(lo, min(lo + chunk, M + 1), dtype=np.int64) * ell
        vals = one_minus[tables.exp[idx]]
        # 1 - g^(ell*i) is never zero in this index range
        N += int(np.count_nonzero((tables.log[vals] & 1) == 0))
    return 2 * N - M


def closed_form(
    ell: int,
    q: int,
    kappa_square=None,
    *,
    cap: int = DEFAULT_TABLE_CAP,
) -> LPoly:
    """Direct L-polynomial when the order m of q mod ell allows one.

    Even m: binomial form with c_{i*m} = C((ell-1)/m, i) * q^(i*m/2) and
    class number (q^(m/2)+1)^((ell-1)/m), no enumeration at all.
    Odd m = (ell-1)/2: the middle coefficient is (ell*a + 1)/m up to sign,
    with a the constant-slot Jacobi coefficient from the quadratic-residue
    count; the square discriminant class takes the + sign.  (That sign
    assignment is the one the trace recursion and the brute-force point
    counts confirm; see tests.)  Other odd m have no closed form; use the
    trace recursion instead.
    """
    g = (ell - 1) // 2
    m = multiplicative_order(q, ell)
    if m % 2 == 0:
        k = (ell - 1) // m
        coeffs = [0] * (2 * g + 1)
        for i in range(k + 1):
            coeffs[i * m] = math.comb(k, i) * q ** (i * m // 2)
        h = (q ** (m // 2) + 1) ** k
        L = LPoly(g, q, tuple(coeffs), h)
        assert h == sum(coeffs)
        return L
    if m == g:
        if m == 1:
            # ell = 3: the order-ell character is not trivial on base-field
            # units, so the middle coefficient varies curve by curve
            raise UnsupportedM(
                "no closed form for ell = 3 with q = 1 mod 3; use the recursion")
        if kappa_square is None:
            raise DomainError(
                "odd m = (ell-1)/2 splits on the discriminant: pass kappa_square")
        ext = field_for_order(q**m, table_cap=cap)
        a_const = jacobi_constant_coeff_qr(ext, ell)
        numerator = ell * a_const + 1
        if numerator % m:
            raise ArithmeticError("middle coefficient is not integral")
        middle = numerator // m
        # S_g = F_1 on the square class and -F_1 on the non-square class,
        # and c_g = S_g / g with F_1 = ell*a + 1
        c_g = middle if kappa_square else -middle
        coeffs = [0] * (2 * g + 1)
        coeffs[0] = 1
        coeffs[g] = c_g
        coeffs[2 * g] = q**g
        h = q**m + 1 + c_g
        return LPoly(g, q, tuple(coeffs), h)
    raise UnsupportedM(
        f"order m = {m} is odd and below (ell-1)/2 = {g}: no closed form")
