"""Arithmetic in GF(2), GF(4) and GF(16) with fixed moduli.

Elements are plain ints in [0, q) encoding coordinates over the polynomial
basis, least-significant bit first:

    GF(4):  value b0 + 2*b1  means  b0 + b1*w,      with w^2 = w + 1
    GF(16): value with bits (a0, a1, a2, a3) means  a0 + a1*A + a2*A^2 + a3*A^3,
            with A^4 = A^3 + A^2 + A + 1

The GF(16) modulus is the 5th cyclotomic polynomial, deliberately not a
primitive one: it forces A^5 = 1, which is what makes block rotation of a
quintic-constructed code correspond to multiplication by A.

Addition in all three fields is XOR of encodings.
"""

from __future__ import annotations

# Modulus polynomials, bit i = coefficient of x^i (top bit included).
_MODULUS = {
    2: 0b10,      # x
    4: 0b111,     # x^2 + x + 1
    16: 0b11111,  # x^4 + x^3 + x^2 + x + 1
}


class Field:
    """One of GF(2), GF(4), GF(16), with table-driven multiplication."""

    def __init__(self, q: int):
        if q not in (2, 4, 16):
            raise ValueError(f"unsupported field size {q}")
        self.q = q
        self.bits = q.bit_length() - 1  # bits per symbol: 1, 2 or 4
        self._mul = [[self._polymul_mod(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _polymul_mod(self, a: int, b: int) -> int:
        mod = _MODULUS[self.q]
        deg = self.bits
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> deg & 1:
                a ^= mod
        return r

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in GF({self.q})")
        return self._inv[a]

    def conjugate(self, a: int) -> int:
        """The involutive automorphism: a^2 over GF(4), a^4 over GF(16)."""
        if self.q == 4:
            return self._mul[a][a]
        if self.q == 16:
            sq = self._mul[a][a]
            return self._mul[sq][sq]
        raise ValueError("conjugation is only defined over GF(4) and GF(16)")

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self._mul[r][a]
        return r

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"GF({self.q})"


GF2 = Field(2)
GF4 = Field(4)
GF16 = Field(16)

_BY_Q = {2: GF2, 4: GF4, 16: GF16}

#: w, the GF(4) generator with w^2 = w + 1.
OMEGA = 0b10
#: A, the GF(16) element of multiplicative order 5.
ALPHA = 0b0010


def field_for(q: int) -> Field:
    try:
        return _BY_Q[q]
    except KeyError:
        raise ValueError(f"unsupported field size {q}") from None


def expand_binary(a: int) -> tuple[int, int, int, int]:
    """GF(16) element -> its four basis coefficients (a0, a1, a2, a3)."""
    GF16.check(a)
    return (a & 1, a >> 1 & 1, a >> 2 & 1, a >> 3 & 1)


def compose_binary(bits) -> int:
    """Inverse of expand_binary."""
    a0, a1, a2, a3 = bits
    return GF16.check(a0 | a1 << 1 | a2 << 2 | a3 << 3)
