"""Exact arithmetic in finite fields GF(p^m), q = p^m <= 2^20.

Elements are canonical indices in [0, q): index 0 is the additive zero
and, for m > 1, an index packs the polynomial-basis coefficients of the
element in base p, constant term in the least significant digit.
Multiplication, inversion and powering run on log/antilog tables built
from a fixed primitive element, so arithmetic is O(1) after
construction.

The modulus and the generator are deterministic so that two builds of
the same field agree element by element:

* modulus: the monic irreducible polynomial of degree m over GF(p)
  whose coefficient vector (constant term first) packs to the smallest
  integer in base p;
* generator: the element of smallest canonical index whose
  multiplicative order is exactly q - 1.
"""

from __future__ import annotations

import math

Fe = int  # canonical element index in [0, q)

MAX_FIELD_SIZE = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _digits(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, d = divmod(v, p)
        out.append(d)
    return out


def _pack(digits: list[int], p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


# -- polynomial helpers over GF(p), coefficient lists lowest degree first --

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod must be monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        c = a[-1]
        if c:
            off = len(a) - 1 - dm
            for j in range(dm):
                a[off + j] = (a[off + j] - c * mod[j]) % p
        a.pop()
    return _ptrim(a)


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for v in range(p ** d):
            div = _digits(v, p, d) + [1]
            if not _pmod(poly, div, p):
                return False
    return True


def _find_modulus(p: int, m: int) -> tuple[int, ...]:
    for v in range(p ** m):
        cand = _digits(v, p, m) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class FieldCtx:
    """A concrete finite field GF(p^m) with precomputed discrete-log tables.

    Immutable after construction and safe to share across threads; all
    operations are pure.
    """

    __slots__ = ("p", "m", "q", "modulus", "generator", "_exp", "_log", "_neg_one")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None = None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p ** m
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {q} exceeds the cap {MAX_FIELD_SIZE}")
        self.p = p
        self.m = m
        self.q = q

        if modulus is None:
            modulus = _find_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _is_irreducible(list(modulus), p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus

        if m == 1:
            def raw_mul(a: int, b: int) -> int:
                return (a * b) % p
        else:
            mod = list(modulus)

            def raw_mul(a: int, b: int) -> int:
                prod = _pmod(_pmul(_digits(a, p, m), _digits(b, p, m), p), mod, p)
                return _pack(prod, p)

        def raw_pow(x: int, e: int) -> int:
            r = 1
            while e:
                if e & 1:
                    r = raw_mul(r, x)
                x = raw_mul(x, x)
                e >>= 1
            return r

        n1 = q - 1
        gen = 1
        if n1 > 1:
            facs = _prime_factors(n1)
            for g in range(2, q):
                if all(raw_pow(g, n1 // f) != 1 for f in facs):
                    gen = g
                    break
            else:
                raise AssertionError("no primitive element found")
        self.generator = gen

        exp = [1] * n1
        for i in range(1, n1):
            exp[i] = raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        if len(set(exp)) != n1:
            raise AssertionError("generator does not have full order")
        self._exp = exp
        self._log = log
        self._neg_one = 1 if p == 2 else p - 1

    # -- arithmetic --------------------------------------------------

    def add(self, a: Fe, b: Fe) -> Fe:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        r = 0
        mult = 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            r += ((da + db) % p) * mult
            mult *= p
        return r

    def neg(self, a: Fe) -> Fe:
        if self.p == 2 or a == 0:
            return a
        if self.m == 1:
            return self.p - a
        return self.mul(a, self._neg_one)

    def sub(self, a: Fe, b: Fe) -> Fe:
        return self.add(a, self.neg(b))

    def mul(self, a: Fe, b: Fe) -> Fe:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: Fe) -> Fe:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: Fe, b: Fe) -> Fe:
        return self.mul(a, self.inv(b))

    def pow(self, a: Fe, e: int) -> Fe:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def order(self, a: Fe) -> int:
        """Least d >= 1 with a^d = 1; always divides q - 1."""
        if a == 0:
            raise ValueError("the zero element has no multiplicative order")
        return (self.q - 1) // math.gcd(self.q - 1, self._log[a])

    def log(self, a: Fe) -> int:
        """Discrete log of a nonzero element with respect to the generator."""
        if a == 0:
            raise ValueError("zero has no discrete logarithm")
        return self._log[a]

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    # -- identity / serialization ------------------------------------

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}


def field_new(p: int, m: int) -> FieldCtx:
    """Build GF(p^m) with the deterministic modulus and generator."""
    return FieldCtx(p, m)


def field_from_dict(d: dict) -> FieldCtx:
    return FieldCtx(int(d["p"]), int(d["m"]), tuple(int(c) for c in d["modulus"]))


def field_from_order(q: int) -> FieldCtx:
    """Build the field of size q, factoring q as a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            v = q
            while v % p == 0:
                v //= p
                m += 1
            if v != 1:
                raise ValueError(f"{q} is not a prime power")
            return FieldCtx(p, m)
    raise ValueError(f"{q} is not a prime power")


def element_order(ctx: FieldCtx, x: Fe) -> int:
    """Multiplicative order of a nonzero element."""
    return ctx.order(x)


def discrete_log_ratio(ctx: FieldCtx, a: Fe, b: Fe, base: Fe) -> int | None:
    """The unique t in [0, order(base)) with b/a = base^t, or None.

    None means b/a lies outside the cyclic group generated by base. A
    linear scan over the powers of base is used; fields in scope are
    small enough that nothing smarter is warranted.
    """
    if a == 0 or b == 0:
        raise ValueError("discrete_log_ratio requires nonzero a and b")
    if base == 0:
        raise ValueError("the base of a discrete logarithm must be nonzero")
    target = ctx.div(b, a)
    cur = 1
    for t in range(ctx.order(base)):
        if cur == target:
            return t
        cur = ctx.mul(cur, base)
    return None
