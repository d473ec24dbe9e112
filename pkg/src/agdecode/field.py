"""Arithmetic in small finite fields GF(p^k).

Elements are plain integers.  The element sum(c_j * alpha^j) is encoded as
sum(c_j * p^j), where alpha is a root of the defining modulus, so 0 and 1 are
the additive and multiplicative identities and the integer order gives a
deterministic total order on the field.

All operations go through precomputed tables; fields here are small
(q <= 64 in practice) so this is both the simplest and the fastest option.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .errors import DegreeMismatch, DivisionByZero, NonPrimeP, ReducibleModulus

__all__ = ["GF", "make_field", "parse_field"]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


def _polymod_p(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); den monic, constant term first."""
    rem = list(num)
    dd = len(den) - 1
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top] % p
        if c:
            for j in range(dd + 1):
                rem[top - dd + j] = (rem[top - dd + j] - c * den[j]) % p
    return [c % p for c in rem[:dd]]


def _is_irreducible(modulus: list[int], p: int) -> bool:
    k = len(modulus) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_polymod_p(modulus, list(low) + [1], p)):
                return False
    return True


class GF:
    """The field GF(p^k) defined by a monic irreducible modulus over GF(p).

    ``modulus`` is the list of k+1 base-p digits of the defining polynomial,
    constant term first.  Construction validates primality, degree and
    irreducibility.
    """

    def __init__(self, p: int, k: int, modulus):
        modulus = [int(c) for c in modulus]
        if not _is_prime(p):
            raise NonPrimeP(f"characteristic {p} is not prime")
        if k < 1 or len(modulus) != k + 1:
            raise DegreeMismatch(f"modulus {modulus} does not have degree {k}")
        if any(not 0 <= c < p for c in modulus):
            raise DegreeMismatch(f"modulus digits must lie in [0, {p})")
        if modulus[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.order = q = p**k
        self.modulus_enc = _undigits(modulus, p)

        vecs = [_digits(a, p, k) for a in range(q)]
        self._add = [[_undigits([(x + y) % p for x, y in zip(va, vb)], p) for vb in vecs] for va in vecs]
        self._neg = [_undigits([(-x) % p for x in va], p) for va in vecs]
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(vecs[a]):
                    if x:
                        for j, y in enumerate(vecs[b]):
                            prod[i + j] += x * y
                r = _undigits(_polymod_p(prod, modulus, p) if k > 1 else [prod[0] % p], p)
                self._mul[a][b] = self._mul[b][a] = r
        self._inv = [0] * q
        for a in range(1, q):
            row = self._mul[a]
            self._inv[a] = row.index(1)

    # -- identity -----------------------------------------------------------
    @property
    def name(self) -> str:
        return f"{self.p}^{self.k}/{self.modulus_enc}"

    def __repr__(self):
        return f"GF({self.name})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    # -- arithmetic ---------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(p) -> GF(q)."""
        return n % self.p

    def elements(self) -> range:
        return range(self.order)

    def check(self, a) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element of {self!r}")
        return a

    def to_vector(self, a: int) -> list[int]:
        return _digits(a, self.p, self.k)

    def from_vector(self, coords) -> int:
        return _undigits([c % self.p for c in coords], self.p)


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int, modulus: tuple) -> GF:
    return GF(p, k, modulus)


def make_field(p: int, k: int, modulus) -> GF:
    """Return the (cached) field GF(p^k) for the given modulus digits."""
    return _cached_field(p, k, tuple(modulus))


_NAME_RE = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*/\s*(\d+)\s*$")


def parse_field(name: str) -> GF:
    """Parse a field name ``"p^k/m"`` (m is the integer encoding of the modulus)."""
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"bad field name {name!r}; expected 'p^k/m'")
    p, k, enc = (int(g) for g in m.groups())
    if not _is_prime(p):
        raise NonPrimeP(f"characteristic {p} is not prime")
    digits = _digits(enc, p, k + 1)
    if _undigits(digits, p) != enc:
        raise DegreeMismatch(f"modulus encoding {enc} exceeds degree {k}")
    return make_field(p, k, digits)
