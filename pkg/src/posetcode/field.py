"""Exact arithmetic in Galois fields GF(q) for prime powers q <= 256.

Elements are plain ints in range(q).  An element with base-p digits
(c_0, ..., c_{m-1}) encodes the polynomial c_0 + c_1 x + ... + c_{m-1} x^(m-1)
over GF(p), so for prime q the encoding is just arithmetic mod p.  Extension
fields reduce modulo a fixed monic irreducible polynomial chosen by a
deterministic search (smallest encoding first), which keeps the meaning of
every int stable across runs and machines.

Construction builds exp/log tables over a primitive element, so multiply,
divide, and invert are table lookups.  Addition uses XOR in characteristic 2
and a precomputed table otherwise.  Fields are interned by make_field, and
two GF instances compare equal exactly when they have the same order and
modulus.
"""

from __future__ import annotations

from functools import lru_cache

MAX_ORDER = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _poly_rem(f: list[int], g: list[int], p: int) -> list[int]:
    # g must be monic; returns f mod g with len(g) - 1 coefficients
    r = list(f)
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            for j in range(dg):
                r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
    return r[:dg]


def _is_irreducible(f: list[int], p: int) -> bool:
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            g = _digits(enc, p, d) + [1]
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def _find_modulus(p: int, m: int) -> tuple[int, ...]:
    """Deterministic reduction modulus for GF(p**m).

    For m == 1 the formal modulus is x itself.  For m > 1, candidates
    x^m + c_{m-1} x^(m-1) + ... + c_0 are scanned by ascending encoding
    sum(c_i p^i) and the first irreducible one wins.
    """
    if m == 1:
        return (0, 1)
    for enc in range(p**m):
        f = _digits(enc, p, m) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("an irreducible polynomial exists for every degree")


class GF:
    """The finite field GF(p**m) on int-encoded elements.

    Prefer make_field(p, m) or gf(q), which intern instances; constructing
    GF directly redoes the modulus search and table build each time.
    """

    __slots__ = ("p", "m", "q", "modulus", "generator", "_exp", "_log", "_add", "_neg")

    def __init__(self, p: int, m: int) -> None:
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree {m} must be at least 1")
        q = p**m
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds the supported cap {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = _find_modulus(p, m)
        self._build_add()
        self._build_mul()

    # -- construction ------------------------------------------------------

    def _add_raw(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if p == 2:
            return a ^ b
        if m == 1:
            return (a + b) % p
        out = 0
        scale = 1
        for _ in range(m):
            out += (a % p + b % p) % p * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        fa = _digits(a, p, m)
        fb = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(fa):
            if ca:
                for j, cb in enumerate(fb):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        mod = self.modulus
        for i in range(len(prod) - 1, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(m):
                    prod[i - m + j] = (prod[i - m + j] - c * mod[j]) % p
        out = 0
        for i in range(m - 1, -1, -1):
            out = out * p + prod[i]
        return out

    def _build_add(self) -> None:
        p, q = self.p, self.q
        self._neg = tuple(self._sub_raw_neg(a) for a in range(q))
        if p == 2 or self.m == 1:
            self._add = None
        else:
            self._add = [
                [self._add_raw(a, b) for b in range(q)] for a in range(q)
            ]

    def _sub_raw_neg(self, a: int) -> int:
        p, m = self.p, self.m
        if p == 2:
            return a
        if m == 1:
            return (p - a) % p
        out = 0
        scale = 1
        for _ in range(m):
            out += (p - a % p) % p * scale
            a //= p
            scale *= p
        return out

    def _build_mul(self) -> None:
        q = self.q
        gen = None
        for g in range(1, q):
            y = g
            order = 1
            while y != 1:
                y = self._mul_raw(y, g)
                order += 1
            if order == q - 1:
                gen = g
                break
        # the multiplicative group of a finite field is cyclic
        assert gen is not None
        self.generator = gen
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        y = 1
        for i in range(q - 1):
            exp[i] = y
            exp[i + q - 1] = y
            log[y] = i
            y = self._mul_raw(y, gen)
        self._exp = exp
        self._log = log

    # -- element ops -------------------------------------------------------

    def check(self, a: int) -> int:
        """Return a unchanged if it encodes an element, else ValueError."""
        if not isinstance(a, int) or a < 0 or a >= self.q:
            raise ValueError(f"{a!r} is not an element of {self!r}")
        return a

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a: int) -> int:
        self.check(a)
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a - b) % self.p
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self.check(a)
        if a == 0:
            if e < 0:
                raise ZeroDivisionError(f"0 has no inverse in {self!r}")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    # -- identity ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return self.q == other.q and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.q, self.modulus))


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> GF:
    """Interned GF(p**m); repeated calls return the same instance."""
    return GF(p, m)


def gf(order: int) -> GF:
    """Interned field of the given prime-power order (2 <= order <= 256)."""
    if order < 2:
        raise ValueError(f"field order {order} must be at least 2")
    p = 2
    while p * p <= order:
        if order % p == 0:
            break
        p += 1
    else:
        p = order
    m = 0
    rest = order
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise ValueError(f"{order} is not a prime power")
    return make_field(p, m)
