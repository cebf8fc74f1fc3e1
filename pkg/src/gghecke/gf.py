"""Arithmetic in small finite fields F_q, q = p^f.

Elements are integer codes 0..q-1.  The code of an element with polynomial
coordinates (c_0, ..., c_{f-1}) over F_p is sum(c_i * p^i), little-endian, so
codes 0..p-1 are the prime subfield and arithmetic on them matches Z/p.

Fields are built once and carry dense lookup tables for add/mul/neg/inv and
the absolute trace, which keeps the group-rewriting layers free of polynomial
work.  Intended for q up to a few hundred; construction refuses larger q.

>>> F4 = make_field(2, 2)
>>> F4.modulus          # x^2 + x + 1, little-endian coefficients
(1, 1, 1)
>>> trace(F4, 2)        # the class of x generates F_4; Tr(x) = 1
1
>>> F9 = make_field(3, 2)
>>> F9.modulus          # x^2 + 1 is the least irreducible over F_3
(1, 0, 1)
>>> trace(F9, 3)        # i = class of x, i^2 = -1; Tr(i) = i + i^3 = 0
0
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

_MAX_Q = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# Dense polynomials over F_p, little-endian coefficient tuples, no leading
# zeros (the zero polynomial is the empty tuple).


def _ptrim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _pmul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(tuple(out))


def _pmod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - lead * m[i]) % p
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def _poly_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..deg(m)//2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            cand = _decode_poly(code, p, d) + (1,)
            if not _pmod(m, cand, p):
                return False
    return True


def _decode_poly(code: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(code % p)
        code //= p
    return tuple(out)


class Field:
    """Immutable F_q with dense operation tables; elements are int codes."""

    __slots__ = (
        "p", "f", "q", "modulus",
        "_add", "_mul", "_neg", "_inv", "_trace", "_squares",
        "_gen", "_roots_cache",
    )

    def __init__(self, p: int, f: int, modulus: tuple[int, ...]):
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = modulus
        q = self.q
        dig = [_decode_poly(c, p, f) for c in range(q)]
        enc = lambda t: sum(c * p**i for i, c in enumerate(t))
        self._add = [
            [enc(tuple((x + y) % p for x, y in zip(dig[a], dig[b]))) for b in range(q)]
            for a in range(q)
        ]
        self._neg = [enc(tuple((-x) % p for x in dig[a])) for a in range(q)]
        mred = lambda t: enc(_pmod(t, modulus, p) + (0,) * f)
        self._mul = [
            [mred(_pmul(_ptrim(dig[a]), _ptrim(dig[b]), p)) for b in range(q)]
            for a in range(q)
        ]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv
        tr = []
        for a in range(q):
            s, x = 0, a
            for _ in range(f):
                s = self._add[s][x]
                x = self.pow(x, p)
            # the trace lies in the prime subfield, where code == residue
            tr.append(s)
        self._trace = tr
        self._squares = frozenset(self._mul[a][a] for a in range(q))
        self._gen = None
        self._roots_cache = {}

    # -- basic ops ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        r, base = 1, a
        while n:
            if n & 1:
                r = self._mul[r][base]
            base = self._mul[base][base]
            n >>= 1
        return r

    def of(self, n: int) -> int:
        """Embed an integer through Z -> F_p <= F_q."""
        return n % self.p

    def coeffs(self, a: int) -> tuple[int, ...]:
        return _decode_poly(a, self.p, self.f)

    def from_coeffs(self, cs: Iterable[int]) -> int:
        cs = tuple(cs)
        if len(cs) != self.f:
            raise ValueError(f"expected {self.f} coefficients")
        return sum((c % self.p) * self.p**i for i, c in enumerate(cs))

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    # -- field-theoretic queries --------------------------------------------

    def trace(self, a: int) -> int:
        """Absolute trace F_q -> F_p, returned as a residue 0..p-1."""
        return self._trace[a]

    def is_square(self, a: int) -> bool:
        return a in self._squares or a == 0

    def rth_roots(self, a: int, r: int) -> frozenset[int]:
        """All y with y^r = a.  {0} for a = 0; empty or gcd(r, q-1) solutions otherwise."""
        if r < 1:
            raise ValueError("r must be >= 1")
        if a == 0:
            return frozenset((0,))
        cache = self._roots_cache
        if r not in cache:
            table: dict[int, list[int]] = {}
            for y in range(1, self.q):
                table.setdefault(self.pow(y, r), []).append(y)
            cache[r] = {x: frozenset(ys) for x, ys in table.items()}
        return cache[r].get(a, frozenset())

    def multiplicative_generator(self) -> int:
        """Least generator of F_q^* in code order."""
        if self._gen is None:
            n = self.q - 1
            primes = _prime_factors(n) if n > 1 else []
            for g in range(1, self.q):
                if all(self.pow(g, n // pr) != 1 for pr in primes):
                    self._gen = g
                    break
        return self._gen

    # -- plumbing ------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"p": self.p, "f": self.f, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.f, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, f={self.f}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def _make_field_cached(p: int, f: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, f, modulus)


def make_field(p: int, f: int = 1, modulus: Iterable[int] | None = None) -> Field:
    """Construct F_{p^f}.

    When no modulus is given the lex-least monic irreducible of degree f is
    chosen (least integer code of the non-leading coefficient vector), so the
    construction is deterministic.

    >>> make_field(5).q
    5
    >>> make_field(2, 3).modulus      # x^3 + x + 1
    (1, 1, 0, 1)
    >>> make_field(4)
    Traceback (most recent call last):
        ...
    ValueError: p must be prime, got 4
    """
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if f < 1:
        raise ValueError(f"f must be >= 1, got {f}")
    if p**f > _MAX_Q:
        raise ValueError(f"q = {p**f} exceeds the supported bound {_MAX_Q}")
    if modulus is None:
        if f == 1:
            mod = (0, 1)
        else:
            for code in range(p**f):
                cand = _decode_poly(code, p, f) + (1,)
                if _poly_irreducible(cand, p):
                    mod = cand
                    break
    else:
        mod = tuple(c % p for c in modulus)
        if len(mod) != f + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if f >= 2 and not _poly_irreducible(mod, p):
            raise ValueError(f"modulus {mod} is reducible over F_{p}")
    return _make_field_cached(p, f, mod)


def field_from_dict(d: dict) -> Field:
    return make_field(d["p"], d["f"], tuple(d["modulus"]))


# Spec-facing functional aliases.

def trace(field: Field, x: int) -> int:
    return field.trace(x)


def rth_roots(field: Field, x: int, r: int) -> frozenset[int]:
    return field.rth_roots(x, r)


def multiplicative_generator(field: Field) -> int:
    return field.multiplicative_generator()


if __name__ == "__main__":
    import doctest

    doctest.testmod()
