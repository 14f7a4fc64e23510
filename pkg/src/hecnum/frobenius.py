"""Frobenius data for curves y^ell = x^2 + ax + b over F_q.

``analyze`` packages everything the trace formulas need: the order m of q
mod ell, the discriminant's squareness, the character value n, and the
integers F_r extracted from signed powers of the Jacobi sum.  All heavy
objects (the extension field F_{q^m}, its tables, the Jacobi sum) are
built lazily, so curves whose requested traces vanish for divisibility
reasons never pay for an enumeration.

Trace table, for t = m*r:
    a(q^t) = -F_r                if the discriminant is a square in F_{q^m},
    a(q^t) = (-1)^(r-1) * F_r    otherwise,
and a(q^t) = 0 whenever m does not divide t.  S_t := N_t - (q^t + 1)
is always -a(q^t).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from sympy import isprime, n_order

from .cyclo import CharSpec, CycInt, char_eval_ell, jacobi_sum, signed_power, frobenius_shift
from .errors import Divisible, FieldTooLarge, GenusZero
from .gf import DEFAULT_TABLE_CAP, FieldElem, FieldSpec, build_field, embed


def multiplicative_order(q: int, ell: int) -> int:
    """Order of q in the unit group mod ell; divides ell - 1."""
    if q % ell == 0:
        raise Divisible(f"{ell} divides {q}")
    return int(n_order(q, ell))


@dataclass(frozen=True)
class CurveParams:
    """y^ell = x^2 + ax + b over the given base field."""

    ell: int
    base_field: FieldSpec
    a: FieldElem
    b: FieldElem

    def __post_init__(self):
        if self.ell < 3 or not isprime(self.ell):
            raise ValueError(f"ell = {self.ell} must be an odd prime")
        if self.base_field.order % self.ell == 0:
            raise Divisible(f"ell = {self.ell} divides q = {self.base_field.order}")
        object.__setattr__(self, "a", self.base_field.coerce(self.a))
        object.__setattr__(self, "b", self.base_field.coerce(self.b))

    @property
    def q(self) -> int:
        return self.base_field.order

    @property
    def kappa(self) -> FieldElem:
        return self.a * self.a - 4 * self.b

    @property
    def genus(self) -> int:
        return 0 if not self.kappa else (self.ell - 1) // 2


def genus(curve: CurveParams) -> int:
    return curve.genus


class TraceProfile:
    """Derived Frobenius data of one curve; immutable once observed.

    F-values and signed powers are extended on demand (r is unbounded),
    and the extension field is only realized when an F-value actually
    requires the Jacobi sum: for even m a closed form supplies every F_r
    with no enumeration at all.
    """

    def __init__(self, curve: CurveParams, char_base, cap: int):
        self.curve = curve
        self.ell = curve.ell
        self.q = curve.q
        self.m = multiplicative_order(self.q, self.ell)
        self.cap = cap
        kappa = curve.kappa
        if not kappa:
            raise GenusZero("discriminant is zero; the trace table is empty")
        # for even m every base-field unit is a square in F_{q^m}; for odd m
        # squareness in F_{q^m} agrees with squareness in F_q because the
        # norm index (q^m-1)/(q-1) is odd
        self.kappa_square = True if self.m % 2 == 0 else curve.base_field.is_square(kappa)
        self._char_base_arg = char_base
        self._ext: Optional[FieldSpec] = None
        self._char: Optional[CharSpec] = None
        self._n: Optional[int] = None
        self._J: Optional[CycInt] = None
        self._powers: dict = {}
        self._F: dict = {}

    # -- lazy character / Jacobi machinery --------------------------------

    @property
    def ext_field(self) -> FieldSpec:
        if self._ext is None:
            base = self.curve.base_field
            if self.m == 1:
                self._ext = base
            else:
                # refuse before paying for the field: the Jacobi enumeration
                # over it would breach the cap anyway
                if base.order**self.m > self.cap:
                    raise FieldTooLarge(
                        f"q^m = {base.order ** self.m} exceeds the "
                        f"enumeration cap {self.cap}")
                self._ext = build_field(base.p, base.d * self.m, table_cap=self.cap)
        return self._ext

    def _ensure_char(self):
        if self._char is not None:
            return
        ext = self.ext_field
        base_arg = self._char_base_arg
        char = CharSpec(ext, self.ell, ext.coerce(base_arg) if base_arg is not None else ext.gen)
        curve, field = self.curve, self.curve.base_field
        arg = -curve.kappa / field.scalar(4)
        if ext is not field:
            arg = embed(field, ext, arg)
        self._n = char_eval_ell(char, arg)
        self._char = char

    @property
    def n(self) -> int:
        """lambda_1(-kappa/4) = zeta^n, evaluated in F_{q^m}."""
        if self.m % 2 == 0:
            # -kappa/4 lies in the base field, whose units are all ell-th
            # powers of F_{q^m} once m > 1: the character value is trivial
            return self.ell
        self._ensure_char()
        return self._n

    @property
    def J(self) -> Optional[CycInt]:
        """The Jacobi sum over F_{q^m}; None on the even-m closed-form path."""
        if self.m % 2 == 0:
            return None
        if self._J is None:
            self._ensure_char()
            self._J = jacobi_sum(self.ext_field, self.ell, self._char.base, cap=self.cap)
        return self._J

    def _power(self, r: int) -> CycInt:
        got = self._powers.get(r)
        if got is None:
            if r == 1:
                got = self.J
            else:
                got = -(self._power(r - 1) * self.J)
            self._powers[r] = got
        return got

    def F(self, r: int) -> int:
        """The trace magnitude at level r (t = m*r)."""
        got = self._F.get(r)
        if got is None:
            if self.m % 2 == 0:
                sign = 1 if r % 2 else -1
                got = sign * (self.ell - 1) * self.q ** (r * self.m // 2)
            else:
                got = frobenius_shift(self._power(r), r, self.n)
            self._F[r] = got
        return got

    @property
    def F_values(self) -> dict:
        return dict(self._F)

    # -- the S_t sequence ---------------------------------------------------

    def S(self, t: int) -> int:
        """S_t = N_t - (q^t + 1); zero unless m divides t."""
        if t < 1:
            raise ValueError("t must be positive")
        if t % self.m:
            return 0
        r = t // self.m
        F = self.F(r)
        return F if self.kappa_square else (-1) ** r * F

    @property
    def S_list(self) -> tuple:
        """(S_1, ..., S_g); forces the Jacobi sum when m is odd."""
        g = (self.ell - 1) // 2
        return tuple(self.S(t) for t in range(1, g + 1))


def analyze(curve: CurveParams, char_base=None, *, cap: int = DEFAULT_TABLE_CAP) -> TraceProfile:
    """Frobenius profile of a positive-genus curve.

    ``char_base`` pins the order-ell character by lambda_1(char_base) =
    zeta (default: the canonical generator of F_{q^m}); every downstream
    trace is provably independent of that choice.
    """
    return TraceProfile(curve, char_base, cap)


def trace(profile: TraceProfile, curve: CurveParams, t: int) -> int:
    """Trace of Frobenius a(q^t) = q^t + 1 - N_t."""
    if curve.genus == 0:
        raise GenusZero("genus-0 curve: trace formulas do not apply")
    return -profile.S(t)


def point_count(profile: TraceProfile, curve: CurveParams, t: int) -> int:
    """Number of F_{q^t}-points, the affine solutions plus one at infinity."""
    if curve.genus == 0:
        raise GenusZero("genus-0 curve: use the trivial zeta function")
    return curve.q**t + 1 - trace(profile, curve, t)
