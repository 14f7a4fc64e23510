"""Vectorized exp/log tables for a whole field.

Element codes are base-p digit packings of coefficient vectors, so a code
fits in an int64 for any order below the table cap.  The builder walks the
cyclic group in baby blocks and advances a whole block at once with the
(linear) multiply-by-giant matrix; the matmul runs in float64 (exact while
entries stay far below 2^53) to get BLAS speed.

Additive structure on packed codes is digitwise mod-p arithmetic.  The
digits of 0..order-1 in natural order are periodic, so affine permutation
tables (v -> const +/- v) are built without any integer division; hot
paths (Jacobi accumulation, fiber scans) reduce to gathers through those
permutations.
"""

from __future__ import annotations

import math

import numpy as np

_CHUNK = 1 << 20


class FieldTables:
    def __init__(self, spec):
        self.spec = spec
        p, d, order = spec.p, spec.d, spec.order
        self.p = p
        self.d = d
        self.order = order
        self._pvec = p ** np.arange(d, dtype=np.int64)
        self.exp, self.log = self._build()
        self._fibers: dict = {}
        self._sq_codes = None
        self._one_minus = None

    # -- construction ----------------------------------------------------

    def _build(self):
        spec, p, d, n = self.spec, self.p, self.d, self.order - 1
        block = min(n, max(1024, math.isqrt(n) + 1))
        babies = []
        cur = spec.one
        for _ in range(block):
            babies.append(cur.coeffs)
            cur = spec.mul(cur, spec.gen)
        giant = cur  # gen^block
        # columns of the advance matrix: digit vectors of giant * x^j
        cols = []
        xj = giant
        x_elem = spec.from_code(p) if d > 1 else None
        for _ in range(d):
            cols.append(xj.coeffs)
            if x_elem is not None:
                xj = spec.mul(xj, x_elem)
        mat_t = np.array(cols, dtype=np.float64)  # row j = giant * x^j

        # float64 is exact here: every matmul entry is at most d * (p-1)^2
        # and every code is below 2^53
        pvec_f = self._pvec.astype(np.float64)
        digits = np.array(babies, dtype=np.float64)  # (block, d)
        exp = np.empty(n, dtype=np.int64)
        inv_p = 1.0 / p
        pos = 0
        while pos < n:
            take = min(block, n - pos)
            exp[pos:pos + take] = (digits[:take] @ pvec_f).astype(np.int64)
            pos += take
            if pos < n:
                digits = digits @ mat_t
                # exact mod p: the +0.5 keeps the scaled floor away from
                # integer boundaries, so no float rounding can misplace it
                digits -= p * np.floor((digits + 0.5) * inv_p)
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        return exp, log

    # -- digit helpers -----------------------------------------------------

    def decompose(self, codes):
        """(n, d) digit matrix of an int64 code array."""
        codes = np.asarray(codes, dtype=np.int64)
        out = np.empty(codes.shape + (self.d,), dtype=np.int64)
        rest = codes.copy()
        for i in range(self.d):
            out[..., i] = rest % self.p
            rest //= self.p
        return out

    def recompose(self, digits):
        return digits @ self._pvec

    def _mapped(self, codes, fn):
        codes = np.asarray(codes, dtype=np.int64)
        out = np.empty_like(codes)
        for lo in range(0, codes.size, _CHUNK):
            part = codes[lo:lo + _CHUNK]
            out[lo:lo + _CHUNK] = self.recompose(fn(self.decompose(part)))
        return out

    def neg_codes(self, codes):
        return self._mapped(codes, lambda dg: (-dg) % self.p)

    def add_const(self, codes, const_code: int):
        cdig = self.decompose(np.int64(const_code))
        return self._mapped(codes, lambda dg: (dg + cdig) % self.p)

    def add_codes(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.empty_like(a)
        for lo in range(0, a.size, _CHUNK):
            da = self.decompose(a[lo:lo + _CHUNK])
            db = self.decompose(b[lo:lo + _CHUNK])
            out[lo:lo + _CHUNK] = self.recompose((da + db) % self.p)
        return out

    # -- affine permutation tables (division-free) ---------------------------

    def perm_add_const(self, const_code: int, negate_input: bool = False):
        """perm[v] = code(const + v), or code(const - v) with negate_input.

        Digit i of v in natural code order repeats with period p^(i+1), so
        each digit plane is a tiled ramp and the whole table costs a few
        cheap passes per digit, no division.
        """
        p, d, order = self.p, self.d, self.order
        rest = int(const_code)
        planes = []
        mult = 1
        for _ in range(d):
            ci = rest % p
            rest //= p
            sign = -1 if negate_input else 1
            planes.append(np.array(
                [((ci + sign * v) % p) * mult for v in range(p)], dtype=np.int64))
            mult *= p
        # fold most-significant first: one outer sum builds the whole table
        acc = planes[-1]
        for plane in reversed(planes[:-1]):
            acc = np.add.outer(acc, plane).ravel()
        return acc

    def one_minus_perm(self):
        """Cached permutation v -> code(1 - v)."""
        if self._one_minus is None:
            self._one_minus = self.perm_add_const(self.spec.one.code, negate_input=True)
        return self._one_minus

    # -- derived tables ----------------------------------------------------

    def fiber_counts(self, k: int):
        """counts[v] = #{y in the field : y^k = v}, as an int64 array."""
        fib = self._fibers.get(k)
        if fib is None:
            n = self.order - 1
            images = self.exp[(np.arange(n, dtype=np.int64) * k) % n]
            fib = np.bincount(images, minlength=self.order)
            fib[0] += 1  # 0^k = 0
            self._fibers[k] = fib
        return fib

    def square_codes(self):
        """codes of x^2 for x = gen^k, k = 0..order-2 (zero handled apart)."""
        if self._sq_codes is None:
            n = self.order - 1
            self._sq_codes = self.exp[(2 * np.arange(n, dtype=np.int64)) % n]
        return self._sq_codes
