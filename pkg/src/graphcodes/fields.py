"""Table-driven arithmetic for F_m (m = p^r) and its quadratic extension F_(m^2).

Elements are plain ints in a fixed serialization: a base-field element with
prime-field coordinates (c_0, ..., c_{r-1}) is the int sum(c_i * p^i), and an
extension element written a + omega*b (a, b in F_m) is the int a + m*b.  In
particular the base field occupies the codes 0..m-1 and omega is always the
code m.  All arithmetic is precomputed into numpy lookup tables at
construction time, so operations are O(1) table reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class FieldError(ValueError):
    """Raised for invalid field specifications or out-of-range operands."""


@dataclass(frozen=True)
class FieldSpec:
    """Defining data for the pair F_m inside F_(m^2).

    Polynomials are monic coefficient tuples over F_p, constant term first.
    ``ext_poly`` (degree 2r) defines F_(m^2) with omega = the residue of x;
    omega must generate the multiplicative group, which is checked at build
    time (this check also catches reducible polynomials).  ``base_poly``
    (degree r) is required when r > 1 to pin down the coordinates of F_m.
    """

    p: int
    r: int
    ext_poly: tuple[int, ...]
    base_poly: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return self.p**self.r

    @property
    def q(self) -> int:
        return self.m**2


#: Fixed defining polynomials for the supported alphabets.
#: F_4: w^2=w+1, F_9: w^2=w+1, F_16: w^4=w+1 (alpha = w^5 spans F_4),
#: F_25: w^2=w+3 (x^2+4x+2).
FIELD_SPECS: dict[int, FieldSpec] = {
    2: FieldSpec(p=2, r=1, ext_poly=(1, 1, 1)),
    3: FieldSpec(p=3, r=1, ext_poly=(2, 2, 1)),
    4: FieldSpec(p=2, r=2, ext_poly=(1, 1, 0, 0, 1), base_poly=(1, 1, 1)),
    5: FieldSpec(p=5, r=1, ext_poly=(2, 4, 1)),
}


def _poly_mul_mod(u: tuple[int, ...], v: tuple[int, ...], ext: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Multiply coefficient vectors of length d modulo the monic poly ``ext``."""
    d = len(u)
    res = [0] * (2 * d - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                res[i + j] = (res[i + j] + ui * vj) % p
    for k in range(2 * d - 2, d - 1, -1):
        c = res[k]
        if c:
            res[k] = 0
            for i in range(d):
                res[k - d + i] = (res[k - d + i] - c * ext[i]) % p
    return tuple(res[:d])


def _poly_eval(poly: tuple[int, ...], x_vec: tuple[int, ...], ext: tuple[int, ...], p: int) -> tuple[int, ...]:
    d = len(x_vec)
    acc = tuple([0] * d)
    for coeff in reversed(poly):
        acc = _poly_mul_mod(acc, x_vec, ext, p)
        acc = tuple((a + (coeff if i == 0 else 0)) % p for i, a in enumerate(acc))
    return acc


class GaloisField:
    """The pair F_m subset F_(m^2), with all operation tables precomputed.

    Attributes of note: ``m``, ``p``, ``r``, ``q`` = m^2, ``omega`` (always
    the code m), and numpy tables ``add``, ``sub``, ``mul``, ``neg``, ``inv``,
    ``conj`` (x -> x^m), ``log``/``exp`` (powers of omega), and ``trace_m``
    (the trace F_m -> F_p on base codes).
    """

    def __init__(self, spec: FieldSpec):
        p, r = spec.p, spec.r
        if p < 2 or any(p % k == 0 for k in range(2, p)):
            raise FieldError(f"characteristic {p} is not prime")
        if r < 1:
            raise FieldError("extension degree must be >= 1")
        if len(spec.ext_poly) != 2 * r + 1 or spec.ext_poly[-1] != 1:
            raise FieldError("ext_poly must be monic of degree 2r")
        if r > 1 and (spec.base_poly is None or len(spec.base_poly) != r + 1 or spec.base_poly[-1] != 1):
            raise FieldError("base_poly must be monic of degree r when r > 1")
        self.spec = spec
        self.p, self.r = p, r
        self.m = spec.m
        self.q = spec.q
        self._build_tables()
        self._check_invariants()

    # -- construction ----------------------------------------------------

    def _build_tables(self) -> None:
        p, r, m, q = self.p, self.r, self.m, self.q
        d = 2 * r
        ext = self.spec.ext_poly

        def vec_of(code: int) -> tuple[int, ...]:
            return tuple((code // p**i) % p for i in range(d))

        def code_of(vec: tuple[int, ...]) -> int:
            return sum(c * p**i for i, c in enumerate(vec))

        x_vec = vec_of(p)  # the residue class of x, our omega
        pows = [vec_of(1)]
        for _ in range(q - 1):
            pows.append(_poly_mul_mod(pows[-1], x_vec, ext, p))
        order = pows.index(vec_of(1), 1)
        if order != q - 1:
            raise FieldError(
                f"x has multiplicative order {order}, not {q - 1}: "
                "ext_poly is not primitive (or not irreducible)"
            )

        # Embed F_m: for r = 1 the base field is the constants; otherwise
        # locate the smallest root of base_poly inside F_(m^2).
        if r == 1:
            embed = [vec_of(a) for a in range(m)]
        else:
            base_poly = self.spec.base_poly
            assert base_poly is not None
            root = None
            for code in range(q):
                z = vec_of(code)
                if _poly_eval(base_poly, z, ext, p) == vec_of(0):
                    root = z
                    break
            if root is None:
                raise FieldError("base_poly has no root in the extension")
            embed = []
            for a in range(m):
                coords = tuple((a // p**i) % p for i in range(r))
                acc = vec_of(0)
                power = vec_of(1)
                for c in coords:
                    term = tuple((c * t) % p for t in power)
                    acc = tuple((x + y) % p for x, y in zip(acc, term))
                    power = _poly_mul_mod(power, root, ext, p)
                embed.append(acc)
            self._alpha_poly_code = code_of(root)

        # serial code a + m*b  ->  polynomial code of embed(a) + omega*embed(b)
        ser_to_poly = np.zeros(q, dtype=np.int64)
        for a in range(m):
            for b in range(m):
                wb = _poly_mul_mod(x_vec, embed[b], ext, p)
                s = tuple((u + v) % p for u, v in zip(embed[a], wb))
                ser_to_poly[a + m * b] = code_of(s)
        if len(set(ser_to_poly.tolist())) != q:
            raise FieldError("{1, omega} is not an F_m-basis of the extension")
        poly_to_ser = np.zeros(q, dtype=np.int64)
        poly_to_ser[ser_to_poly] = np.arange(q)

        # componentwise addition in polynomial codes, re-indexed to serial
        digits = np.zeros((q, d), dtype=np.int64)
        tmp = np.arange(q)
        for i in range(d):
            digits[:, i] = tmp % p
            tmp //= p
        sum_digits = (digits[ser_to_poly][:, None, :] + digits[ser_to_poly][None, :, :]) % p
        poly_add = (sum_digits * (p ** np.arange(d))).sum(axis=2)
        self.add = poly_to_ser[poly_add].astype(np.uint8)

        # multiplication via omega-logs
        log = np.full(q, -1, dtype=np.int64)
        exp = np.zeros(q - 1, dtype=np.int64)
        for k in range(q - 1):
            s = poly_to_ser[code_of(pows[k])]
            exp[k] = s
            log[s] = k
        self.log, self.exp = log, exp.astype(np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        nz = np.arange(q)[log >= 0]
        lg = log[nz]
        mul[np.ix_(nz, nz)] = exp[(lg[:, None] + lg[None, :]) % (q - 1)]
        self.mul = mul
        self.neg = np.array([poly_to_ser[code_of(tuple((-c) % p for c in vec_of(ser_to_poly[s])))] for s in range(q)], dtype=np.uint8)
        self.sub = self.add[:, self.neg]
        inv = np.zeros(q, dtype=np.uint8)
        inv[nz] = exp[(-lg) % (q - 1)]
        self.inv_table = inv
        conj = np.zeros(q, dtype=np.uint8)
        conj[nz] = exp[(lg * m) % (q - 1)]
        self.conj_table = conj

        # trace of the base field down to F_p
        trace_m = np.zeros(m, dtype=np.uint8)
        for a in range(m):
            acc = 0
            z = a
            for _ in range(r):
                acc = int(self.add[acc, z])
                z = self._pow_raw(z, p)
            trace_m[a] = acc
        self.trace_m = trace_m

        self.omega = m
        # the constant 1/(omega - omega^m) of the hermitian form
        diff = self.sub[self.omega, self.conj_table[self.omega]]
        self._herm_scale = int(self.inv_table[diff])

    def _pow_raw(self, x: int, k: int) -> int:
        acc = 1
        base = x
        while k:
            if k & 1:
                acc = int(self.mul[acc, base])
            base = int(self.mul[base, base])
            k >>= 1
        return acc

    def _check_invariants(self) -> None:
        m, q, p = self.m, self.q, self.p
        if self.omega < m or self.log[self.omega] != 1:
            raise FieldError("omega serialization is inconsistent")
        # base field is closed under the tables
        for a in range(m):
            for b in range(m):
                if self.add[a, b] >= m or self.mul[a, b] >= m:
                    raise FieldError("base field is not closed in the tables")
        # conjugation fixes exactly the base field
        fixed = [x for x in range(q) if self.conj_table[x] == x]
        if sorted(fixed) != list(range(m)):
            raise FieldError("x -> x^m does not fix exactly F_m")
        if sorted(set(int(self.trace_m[a]) for a in range(m))) != list(range(p)):
            raise FieldError("trace F_m -> F_p is not surjective")

    # -- scalar operations ------------------------------------------------

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise FieldError(f"{x} is not an element code of F_{self.q}")
        return x

    def add_el(self, x: int, y: int) -> int:
        return int(self.add[self.check(x), self.check(y)])

    def sub_el(self, x: int, y: int) -> int:
        return int(self.sub[self.check(x), self.check(y)])

    def mul_el(self, x: int, y: int) -> int:
        return int(self.mul[self.check(x), self.check(y)])

    def inv_el(self, x: int) -> int:
        if self.check(x) == 0:
            raise ZeroDivisionError("inversion of zero")
        return int(self.inv_table[x])

    def neg_el(self, x: int) -> int:
        return int(self.neg[self.check(x)])

    def power(self, x: int, k: int) -> int:
        self.check(x)
        if x == 0:
            if k < 0:
                raise ZeroDivisionError("inversion of zero")
            return 1 if k == 0 else 0
        return int(self.exp[(int(self.log[x]) * k) % (self.q - 1)])

    def conjugate(self, x: int) -> int:
        return int(self.conj_table[self.check(x)])

    def trace_to_prime(self, a: int) -> int:
        if not 0 <= a < self.m:
            raise FieldError(f"{a} is not in the base field F_{self.m}")
        return int(self.trace_m[a])

    # -- (a, b) decomposition ----------------------------------------------

    def compose(self, a: int, b: int) -> int:
        """a + omega*b for base-field codes a, b."""
        if not (0 <= a < self.m and 0 <= b < self.m):
            raise FieldError("compose expects base-field codes")
        return a + self.m * b

    def decompose(self, x: int) -> tuple[int, int]:
        self.check(x)
        return x % self.m, x // self.m

    def elements(self) -> range:
        return range(self.q)

    def base_elements(self) -> range:
        return range(self.m)

    # -- inner products ----------------------------------------------------

    def hermitian_ip(self, u, v) -> int:
        """tr_{m/p}((u.v^m - u^m.v) / (omega - omega^m)), a prime-field code.

        Vanishes identically on u = v and is antisymmetric; over the a + wb
        splitting it coincides with the symplectic product of the (a|b) rows.
        """
        if len(u) != len(v):
            raise FieldError("length mismatch")
        acc = 0
        for x, y in zip(u, v):
            t = self.sub[
                self.mul[self.check(x), self.conj_table[self.check(y)]],
                self.mul[self.conj_table[x], y],
            ]
            acc = int(self.add[acc, t])
        scaled = int(self.mul[acc, self._herm_scale])
        if scaled >= self.m:
            raise FieldError("hermitian numerator did not land in the base field")
        return self.trace_to_prime(scaled)

    def symplectic_ip(self, row1, row2) -> int:
        """tr_{m/p}(b.a' - b'.a) for rows (a|b), (a'|b') over F_m."""
        if len(row1) != len(row2) or len(row1) % 2:
            raise FieldError("rows must have equal even length")
        n = len(row1) // 2
        acc = 0
        for i in range(n):
            a, b = row1[i], row1[n + i]
            a2, b2 = row2[i], row2[n + i]
            if not (a < self.m and b < self.m and a2 < self.m and b2 < self.m):
                raise FieldError("symplectic rows must be over the base field")
            t = self.sub[self.mul[b, a2], self.mul[b2, a]]
            acc = int(self.add[acc, t])
        return self.trace_to_prime(acc)


@lru_cache(maxsize=None)
def _field_for_spec(spec: FieldSpec) -> GaloisField:
    return GaloisField(spec)


def field_for(m: int, spec: FieldSpec | None = None) -> GaloisField:
    """The cached field pair for alphabet size m (2, 3, 4, 5 built in)."""
    if spec is not None:
        if spec.m != m:
            raise FieldError(f"spec has m={spec.m}, requested {m}")
        return _field_for_spec(spec)
    try:
        return _field_for_spec(FIELD_SPECS[m])
    except KeyError:
        raise FieldError(f"no built-in field for m={m}; supply a FieldSpec") from None
