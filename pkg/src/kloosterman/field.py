"""Exact arithmetic in the binary field GF(2^r).

Elements are plain integers in [0, 2^r): bit i is the coefficient of x^i in
the polynomial-basis representation.  Addition is XOR, multiplication is the
carry-less polynomial product reduced modulo a fixed irreducible polynomial
of degree r, supplied as a bitmask with the same bit convention.

Default reduction polynomials (one per degree, lexicographically small and
widely tabulated):

    r=1 : x + 1                   -> 0b11
    r=2 : x^2 + x + 1             -> 0b111
    r=3 : x^3 + x + 1             -> 0b1011
    r=4 : x^4 + x + 1             -> 0b10011
    r=5 : x^5 + x^2 + 1           -> 0b100101
    r=6 : x^6 + x + 1             -> 0b1000011
    r=7 : x^7 + x + 1             -> 0b10000011
    r=8 : x^8 + x^4 + x^3 + x^2 + 1 -> 0b100011101

Any other irreducible polynomial of the right degree may be passed in; all
outputs that are invariant under field isomorphism (value multisets, moment
tables, weight distributions) do not depend on the choice.
"""

from __future__ import annotations

DEFAULT_POLYS = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
}

MAX_DEGREE = 20

# Tables are cheap and worthwhile only for small fields.
_TABLE_LIMIT = 256


def poly_degree(p: int) -> int:
    """Degree of a GF(2) polynomial bitmask (-1 for the zero polynomial)."""
    return p.bit_length() - 1


def poly_mod(a: int, b: int) -> int:
    """Remainder of carry-less division of a by b (b != 0)."""
    db = poly_degree(b)
    while poly_degree(a) >= db:
        a ^= b << (poly_degree(a) - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    d = poly_degree(poly)
    if d < 1:
        return False
    for div in range(2, 1 << (d // 2 + 1)):
        if poly_degree(div) >= 1 and poly_mod(poly, div) == 0:
            return False
    return True


class Field:
    """GF(2^r) under a fixed irreducible reduction polynomial.

    All operations are pure functions of their arguments; instances hold
    only immutable parameters plus precomputed lookup tables, so a single
    instance is safe to share across any number of concurrent callers.
    """

    def __init__(self, r: int, poly: int | None = None):
        if not 1 <= r <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {r}")
        if poly is None:
            try:
                poly = DEFAULT_POLYS[r]
            except KeyError:
                raise ValueError(
                    f"no default reduction polynomial for r={r}; supply one explicitly"
                ) from None
        if poly_degree(poly) != r:
            raise ValueError(
                f"reduction polynomial 0b{poly:b} does not have degree {r}"
            )
        if not is_irreducible(poly):
            raise ValueError(f"reduction polynomial 0b{poly:b} is reducible")
        self.r = r
        self.poly = poly
        self.q = 1 << r
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None
        self._trace_table: list[int] | None = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    def __repr__(self) -> str:
        return f"Field(r={self.r}, poly=0b{self.poly:b})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Field):
            return self.r == other.r and self.poly == other.poly
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.r, self.poly))

    # ------------------------------------------------------------------
    # internals
    # ------------------------------------------------------------------

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF(2^{self.r})")
        return a

    def _mul_raw(self, a: int, b: int) -> int:
        p = 0
        top = 1 << self.r
        while b:
            if b & 1:
                p ^= a
            a <<= 1
            if a & top:
                a ^= self.poly
            b >>= 1
        return p

    def _trace_raw(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.r):
            t ^= x
            x = self._mul_raw(x, x)
        if t not in (0, 1):
            raise ArithmeticError(f"trace left the prime subfield: {t}")
        return t

    def _build_tables(self) -> None:
        q = self.q
        self._mul_table = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        self._trace_table = [self._trace_raw(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.pow(a, q - 2)
        self._inv_table = inv

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        """a + b (bitwise XOR; every element is its own additive inverse)."""
        self._check(a)
        self._check(b)
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """Carry-less product of a and b reduced modulo the field polynomial."""
        self._check(a)
        self._check(b)
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def pow(self, a: int, e: int) -> int:
        """a raised to a nonnegative integer power, by square and multiply."""
        self._check(a)
        if e < 0:
            raise ValueError("negative exponents are not supported; use inv")
        res = 1
        while e:
            if e & 1:
                res = self.mul(res, a)
            a = self.mul(a, a)
            e >>= 1
        return res

    def inv(self, a: int) -> int:
        """Multiplicative inverse of a nonzero element, as a^(q-2)."""
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(r-1)) down to GF(2)."""
        self._check(a)
        if self._trace_table is not None:
            return self._trace_table[a]
        return self._trace_raw(a)

    def lam(self, a: int) -> int:
        """Canonical additive character: (-1)**trace(a), valued in {+1, -1}."""
        return -1 if self.trace(a) else 1

    # ------------------------------------------------------------------
    # iteration helpers
    # ------------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def inv_table(self) -> list[int]:
        """Inverse lookup list with a 0 placeholder at index 0."""
        if self._inv_table is not None:
            return self._inv_table
        return [0] + [self.pow(a, self.q - 2) for a in range(1, self.q)]

    def lam_table(self) -> list[int]:
        """Character lookup list over all field elements."""
        return [self.lam(a) for a in range(self.q)]
