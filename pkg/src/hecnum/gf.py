"""Arithmetic in finite fields F_{p^d} with p an odd prime.

A :class:`FieldSpec` fixes a monic irreducible modulus and a multiplicative
generator ``gen``; elements are little-endian coefficient vectors mod p.
When no modulus is supplied the canonical one is the Conway polynomial,
computed on the fly: the first monic primitive polynomial in the
sign-alternating lexicographic word order whose root is norm-compatible
with the canonical polynomials of all proper subfields.  That convention
pins a single cross-system field realization and makes the dlog-ratio
subfield map ``embed`` an honest field homomorphism between canonical
fields of the same characteristic.

Discrete logs use a full lookup table for orders up to ``table_cap``
(default 2^24) and baby-step/giant-step up to ``dlog_cap`` (default 2^40).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from sympy import factorint, isprime

from .errors import (
    FieldTooLarge,
    IncompatibleFields,
    NotIrreducible,
    NotPrime,
    ZeroElement,
)

DEFAULT_TABLE_CAP = 1 << 24
DEFAULT_DLOG_CAP = 1 << 40


# ----------------------------------------------------------------------
# dense polynomial arithmetic over Z_p (little-endian coefficient tuples)
# ----------------------------------------------------------------------

def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for j in range(df):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _trim(a[:df])


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p)


def _ppowmod(a, e, f, p):
    result = (1,)
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _padd(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x + y) % p for x, y in zip(a, b)])


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        # reduce a mod b (b made monic on the fly)
        inv = pow(b[-1], p - 2, p)
        bm = tuple((c * inv) % p for c in b)
        r = list(a)
        db = len(bm) - 1
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] % p
            if c:
                r[i] = 0
                for j in range(db):
                    r[i - db + j] = (r[i - db + j] - c * bm[j]) % p
        a, b = b, _trim(r[:db] if len(r) >= db else r)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin test for a monic polynomial over Z_p."""
    f = tuple(c % p for c in modulus)
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    x = (0, 1)
    # x^(p^d) == x mod f
    t = x
    for _ in range(d):
        t = _ppowmod(t, p, f, p)
    if _trim(t) != x:
        return False
    for r in {r for r in factorint(d)}:
        t = x
        for _ in range(d // r):
            t = _ppowmod(t, p, f, p)
        diff = list(t) + [0] * (2 - len(t))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(_trim(diff), f, p)) > 1:
            return False
    return True


def _elem_order_is_maximal(a, f, p, order, factors) -> bool:
    if _ppowmod(a, order, f, p) != (1,):
        return False
    return all(_ppowmod(a, order // r, f, p) != (1,) for r in factors)


@lru_cache(maxsize=None)
def _unit_group_factors(order_minus_one: int):
    return tuple(sorted(factorint(order_minus_one)))


# ----------------------------------------------------------------------
# Conway polynomials
# ----------------------------------------------------------------------

def _word_to_poly(word, d, p):
    # word = (w_{d-1}, ..., w_0); coefficient c_i = (-1)^(d-i) * w_i mod p
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    for idx, w in enumerate(word):
        i = d - 1 - idx
        sign = -1 if (d - i) % 2 else 1
        coeffs[i] = (sign * w) % p
    return tuple(coeffs)


@lru_cache(maxsize=None)
def conway_polynomial(p: int, d: int) -> tuple:
    """Conway polynomial of F_{p^d}, as little-endian coefficients."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    order = p**d - 1
    factors = _unit_group_factors(order)
    if d == 1:
        for g in range(1, p):
            if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
                return ((-g) % p, 1)
        raise RuntimeError("no primitive root found")  # unreachable for prime p
    sub = [
        (order // (p**e - 1), conway_polynomial(p, e))
        for e in range(1, d)
        if d % e == 0
    ]
    # enumerate candidate words in ascending lexicographic order
    for w in range(p**d):
        word = []
        t = w
        for _ in range(d):
            word.append(t % p)
            t //= p
        word.reverse()
        f = _word_to_poly(word, d, p)
        if f[0] == 0 or not is_irreducible(f, p):
            continue
        x = (0, 1)
        ok = True
        for exp, cf in sub:
            root = _ppowmod(x, exp, f, p)
            acc = ()
            for c in reversed(cf):
                acc = _padd(_pmulmod(acc, root, f, p), (c,), p)
            if acc != ():
                ok = False
                break
        if not ok:
            continue
        if not _elem_order_is_maximal(x, f, p, order, factors):
            continue
        return f
    raise RuntimeError(f"Conway search exhausted for p={p}, d={d}")


# ----------------------------------------------------------------------
# field spec and elements
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FieldElem:
    """An element of F_{p^d}: ``coeffs[i]`` multiplies x^i, all in [0, p)."""

    field: "FieldSpec"
    coeffs: tuple

    def __add__(self, other):
        return self.field.add(self, self.field.coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.sub(self, self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.sub(self.field.coerce(other), self)

    def __mul__(self, other):
        return self.field.mul(self, self.field.coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, e):
        return self.field.pow(self, e)

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(self.field.coerce(other)))

    def __rtruediv__(self, other):
        return self.field.mul(self.field.coerce(other), self.field.inv(self))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return self.field.render(self)

    @property
    def code(self) -> int:
        """Integer encoding: sum of coeffs[i] * p^i."""
        c = 0
        for digit in reversed(self.coeffs):
            c = c * self.field.p + digit
        return c


class FieldSpec:
    """Immutable description of F_{p^d} plus its arithmetic.

    Attributes mirror the construction: ``p``, ``d``, ``modulus`` (monic,
    length d+1), ``order`` = p^d, and ``gen``, a verified generator of the
    unit group.  A full dlog table is built lazily while ``order`` stays
    within ``table_cap``; larger fields fall back to BSGS up to ``dlog_cap``.
    """

    def __init__(self, p, d, modulus, gen_coeffs, table_cap, dlog_cap):
        self.p = p
        self.d = d
        self.modulus = tuple(modulus)
        self.order = p**d
        self.table_cap = table_cap
        self.dlog_cap = dlog_cap
        self.gen = FieldElem(self, tuple(gen_coeffs))
        self.zero = FieldElem(self, (0,) * d)
        self.one = FieldElem(self, (1,) + (0,) * (d - 1))
        self._tables = None
        self._bsgs = None
        # x^d ... x^(2d-2) reduced mod f, for schoolbook reduction
        red = []
        cur = tuple(((-c) % p) for c in self.modulus[:d])
        for _ in range(d - 1):
            red.append(cur)
            cur = self._shift_reduce(cur)
        self._reduction = red

    # -- construction helpers ------------------------------------------

    def _shift_reduce(self, coeffs):
        p, d = self.p, self.d
        top = coeffs[d - 1]
        shifted = (0,) + coeffs[: d - 1]
        if not top:
            return shifted
        tail = self.modulus[:d]
        return tuple((s - top * t) % p for s, t in zip(shifted, tail))

    # -- element plumbing ----------------------------------------------

    def elem(self, coeffs) -> FieldElem:
        c = tuple(x % self.p for x in coeffs)
        if len(c) != self.d:
            c = (c + (0,) * self.d)[: self.d]
        return FieldElem(self, c)

    def scalar(self, k: int) -> FieldElem:
        """Image of the integer k under Z -> F_p -> F_{p^d}."""
        return self.elem((k % self.p,) + (0,) * (self.d - 1))

    def coerce(self, x) -> FieldElem:
        if isinstance(x, FieldElem):
            if x.field is not self:
                raise IncompatibleFields("element belongs to a different field")
            return x
        if isinstance(x, int):
            return self.scalar(x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def from_code(self, code: int) -> FieldElem:
        digits = []
        for _ in range(self.d):
            digits.append(code % self.p)
            code //= self.p
        return FieldElem(self, tuple(digits))

    def elements(self):
        """Iterate the whole field (code order). Only sane for small fields."""
        for c in range(self.order):
            yield self.from_code(c)

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        return FieldElem(self, tuple((x + y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a, b):
        return FieldElem(self, tuple((x - y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a):
        return FieldElem(self, tuple((-x) % self.p for x in a.coeffs))

    def mul(self, a, b):
        p, d = self.p, self.d
        if d == 1:
            return FieldElem(self, ((a.coeffs[0] * b.coeffs[0]) % p,))
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    prod[i + j] += ai * bj
        out = [c % p for c in prod[:d]]
        for k in range(d, 2 * d - 1):
            c = prod[k] % p
            if c:
                row = self._reduction[k - d]
                for j in range(d):
                    out[j] = (out[j] + c * row[j]) % p
        return FieldElem(self, tuple(out))

    def inv(self, a):
        if not a:
            raise ZeroElement("0 has no inverse")
        # extended Euclid in Z_p[x]: s*a + t*modulus = gcd = const
        p = self.p
        r0, r1 = self.modulus, _trim(a.coeffs)
        s0, s1 = (), (1,)
        while r1:
            lead = pow(r1[-1], p - 2, p)
            monic1 = tuple((c * lead) % p for c in r1)
            q, rem = self._divmod(r0, monic1)
            q = tuple((c * lead) % p for c in q)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        lead_inv = pow(r0[-1], p - 2, p)
        return self.elem(tuple((c * lead_inv) % p for c in s0))

    def _divmod(self, a, b):
        # b monic
        p = self.p
        a = list(a)
        db = len(b) - 1
        q = [0] * max(1, len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] % p
            if c:
                q[i - db] = c
                a[i] = 0
                for j in range(db):
                    a[i - db + j] = (a[i - db + j] - c * b[j]) % p
        return _trim(q), _trim(a[:db])

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def exp(self, k: int) -> FieldElem:
        """gen^k (k mod order-1)."""
        k %= self.order - 1
        t = self.tables(strict=False)
        if t is not None:
            return self.from_code(int(t.exp[k]))
        return self.pow(self.gen, k)

    # -- dlog ------------------------------------------------------------

    def tables(self, strict=True):
        """Exp/log lookup tables; None (or FieldTooLarge) above table_cap."""
        if self._tables is None:
            if self.order > self.table_cap:
                if strict:
                    raise FieldTooLarge(
                        f"order {self.order} exceeds table cap {self.table_cap}")
                return None
            from .tables import FieldTables

            self._tables = FieldTables(self)
        return self._tables

    @property
    def dlog_table(self):
        t = self.tables(strict=False)
        return None if t is None else t.log

    def dlog(self, x) -> int:
        """k in [0, order-2] with gen^k = x."""
        x = self.coerce(x)
        if not x:
            raise ZeroElement("dlog of 0 undefined")
        t = self.tables(strict=False)
        if t is not None:
            return int(t.log[x.code])
        if self.order > self.dlog_cap:
            raise FieldTooLarge(
                f"order {self.order} exceeds dlog cap {self.dlog_cap}")
        return self._dlog_bsgs(x)

    def _dlog_bsgs(self, x):
        n = self.order - 1
        m = math.isqrt(n - 1) + 1
        if self._bsgs is None:
            baby = {}
            cur = self.one
            for j in range(m):
                baby.setdefault(cur.code, j)
                cur = self.mul(cur, self.gen)
            self._bsgs = (baby, self.pow(self.inv(self.gen), m))
        baby, giant = self._bsgs
        cur = x
        for i in range(m + 1):
            j = baby.get(cur.code)
            if j is not None:
                return (i * m + j) % n
            cur = self.mul(cur, giant)
        raise ArithmeticError("BSGS failed; gen is not a generator?")

    def is_square(self, x) -> bool:
        """Quadratic-residue test: x^((order-1)/2) == 1. Rejects x = 0."""
        x = self.coerce(x)
        if not x:
            raise ZeroElement("squareness of 0 is a genus-0 question")
        return self.pow(x, (self.order - 1) // 2) == self.one

    # -- rendering -------------------------------------------------------

    def render(self, x: FieldElem) -> str:
        if self.d == 1:
            return str(x.coeffs[0])
        if not x:
            return "0"
        if x == self.one:
            return "1"
        # repr stays cheap: only use dlog if the table already exists
        if self._tables is not None:
            return f"g^{self.dlog(x)}"
        return str(list(x.coeffs))

    def size_str(self) -> str:
        return str(self.p) if self.d == 1 else f"{self.p}^{self.d}"

    def __repr__(self):
        return f"FieldSpec(F_{self.size_str()})"

    def __hash__(self):
        return hash((self.p, self.d, self.modulus, self.gen.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.d, self.modulus, self.gen.coeffs)
            == (other.p, other.d, other.modulus, other.gen.coeffs)
        )


_FIELD_CACHE: dict = {}


def build_field(
    p: int,
    d: int = 1,
    modulus: Optional[Sequence[int]] = None,
    *,
    gen: Optional[Sequence[int]] = None,
    table_cap: int = DEFAULT_TABLE_CAP,
    dlog_cap: int = DEFAULT_DLOG_CAP,
) -> FieldSpec:
    """Construct (and cache) F_{p^d} for an odd prime p.

    Without ``modulus`` the Conway polynomial is used and ``gen`` is the
    class of x (for d = 1: the smallest primitive root).  A custom modulus
    must be monic irreducible of degree d; a generator is then located by
    scanning element codes unless ``gen`` pins one explicitly.
    """
    if d < 1:
        raise ValueError("extension degree must be >= 1")
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise NotPrime("characteristic 2 is not supported (p must be odd)")
    key = (p, d, None if modulus is None else tuple(c % p for c in modulus),
           None if gen is None else tuple(gen), table_cap, dlog_cap)
    hit = _FIELD_CACHE.get(key)
    if hit is not None:
        return hit

    if modulus is None:
        mod = conway_polynomial(p, d)
        gen_coeffs = ((-mod[0]) % p,) if d == 1 else (0, 1) + (0,) * (d - 2)
    else:
        mod = tuple(c % p for c in modulus)
        if len(mod) != d + 1 or mod[-1] != 1:
            raise NotIrreducible(f"modulus must be monic of degree {d}")
        if not is_irreducible(mod, p):
            raise NotIrreducible(f"{list(mod)} is reducible over Z_{p}")
        gen_coeffs = None

    spec = FieldSpec(p, d, mod, gen_coeffs or (0,) * d, table_cap, dlog_cap)

    if gen_coeffs is None:
        order = spec.order - 1
        factors = _unit_group_factors(order)
        if gen is not None:
            cand = spec.elem(gen)
            if not _is_generator(spec, cand, order, factors):
                raise ValueError(f"{cand!r} does not generate the unit group")
            spec.gen = cand
        else:
            for code in range(1, spec.order):
                cand = spec.from_code(code)
                if _is_generator(spec, cand, order, factors):
                    spec.gen = cand
                    break
            else:
                raise RuntimeError("no generator found (unreachable)")
    else:
        # canonical path: verify the Conway promise once
        order = spec.order - 1
        factors = _unit_group_factors(order)
        assert _is_generator(spec, spec.gen, order, factors)

    _FIELD_CACHE[key] = spec
    return spec


def _is_generator(spec, x, order, factors):
    if not x:
        return False
    if spec.pow(x, order) != spec.one:
        return False
    return all(spec.pow(x, order // r) != spec.one for r in factors)


# ----------------------------------------------------------------------
# subfield maps
# ----------------------------------------------------------------------

_EMBED_OK: dict = {}


def _check_tower(sub: FieldSpec, sup: FieldSpec):
    if sub.p != sup.p or sup.d % sub.d != 0:
        raise IncompatibleFields(
            f"F_{sub.size_str()} is not a subfield of F_{sup.size_str()}")
    key = (id(sub), id(sup))
    ok = _EMBED_OK.get(key)
    if ok is None:
        # the dlog-ratio map is a field hom iff the image of gen_sub is a
        # root of gen_sub's minimal polynomial over F_p
        ratio = (sup.order - 1) // (sub.order - 1)
        img = sup.pow(sup.gen, ratio)
        mp = _minimal_polynomial(sub, sub.gen)
        acc = sup.zero
        for c in reversed(mp):
            acc = sup.add(sup.mul(acc, img), sup.scalar(c))
        ok = not acc
        _EMBED_OK[key] = ok
    if not ok:
        raise IncompatibleFields(
            "generators are not norm-compatible; embedding would not be additive")


def _minimal_polynomial(spec: FieldSpec, x: FieldElem) -> tuple:
    """Minimal polynomial of x over F_p, little-endian, monic."""
    p = spec.p
    conj = []
    cur = x
    while True:
        conj.append(cur)
        cur = spec.pow(cur, p)
        if cur == x:
            break
    poly = [spec.one]
    for c in conj:
        nxt = [spec.zero] * (len(poly) + 1)
        for i, coeff in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + coeff
            nxt[i] = nxt[i] - coeff * c
        poly = nxt
    out = []
    for coeff in poly:
        if any(coeff.coeffs[1:]):
            raise ArithmeticError("minimal polynomial has non-prime coefficients")
        out.append(coeff.coeffs[0])
    return tuple(out)


def embed(sub: FieldSpec, sup: FieldSpec, x: FieldElem) -> FieldElem:
    """Field embedding F_{p^e} -> F_{p^(e*k)}: gen_sub^j -> gen_sup^(j*ratio)."""
    _check_tower(sub, sup)
    x = sub.coerce(x)
    if not x:
        return sup.zero
    ratio = (sup.order - 1) // (sub.order - 1)
    return sup.exp(sub.dlog(x) * ratio)


def norm(sup: FieldSpec, sub: FieldSpec, x: FieldElem) -> FieldElem:
    """Norm from F_{p^(e*k)} down to F_{p^e}, identified inside the subfield."""
    _check_tower(sub, sup)
    x = sup.coerce(x)
    if not x:
        raise ZeroElement("norm of 0 undefined here")
    ratio = (sup.order - 1) // (sub.order - 1)
    k = (sup.dlog(x) * ratio) % (sup.order - 1)
    assert k % ratio == 0
    return sub.exp(k // ratio)


def split_prime_power(q: int) -> tuple:
    """(p, e) with q = p^e, or NotPrime if q is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, e),) = fac.items()
    return p, e


def field_for_order(q: int, **caps) -> FieldSpec:
    """Canonical field with exactly q elements (q an odd prime power)."""
    p, e = split_prime_power(q)
    return build_field(p, e, **caps)
