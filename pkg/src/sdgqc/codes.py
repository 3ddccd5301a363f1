"""Linear codes over GF(2)/GF(4)/GF(16).

A code is identified with the unique reduced row-echelon form of its
generator matrix, so two LinearCode objects are equal iff they describe the
same set of codewords.  Binary codewords are enumerated as packed bit ints
with a Gray-code walk; GF(4)/GF(16) vectors are packed 2-/4-bit symbol
arrays.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .fields import Field, GF2, field_for

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"

#: Enumeration work above this many codewords fails loudly.
DEFAULT_BUDGET = 2**24

FORMAT_HEADER = "sdgqc-code v1"


class EnumerationBudgetExceeded(Exception):
    """Raised when an exhaustive codeword enumeration would be too large."""


def vec_add(u: tuple, v: tuple) -> tuple:
    # addition is XOR of encodings in every supported field
    return tuple(a ^ b for a, b in zip(u, v))


def scalar_mul(field: Field, c: int, v: tuple) -> tuple:
    row = field._mul[c]
    return tuple(row[a] for a in v)


def vec_weight(v: Iterable[int]) -> int:
    return sum(1 for s in v if s)


def inner_product(field: Field, u: tuple, v: tuple, inner: str) -> int:
    if inner == EUCLIDEAN:
        sigma = v
    elif inner == HERMITIAN:
        sigma = [field.conjugate(b) for b in v]
    else:
        raise ValueError(f"unknown inner product {inner!r}")
    acc = 0
    for a, b in zip(u, sigma):
        acc ^= field.mul(a, b)
    return acc


def check_inner(field: Field, inner: str) -> None:
    if inner == EUCLIDEAN and field.q != 2:
        raise ValueError("Euclidean duality is used only over GF(2) here")
    if inner == HERMITIAN and field.q not in (4, 16):
        raise ValueError("Hermitian duality needs GF(4) or GF(16)")
    if inner not in (EUCLIDEAN, HERMITIAN):
        raise ValueError(f"unknown inner product {inner!r}")


def rref(field: Field, rows: Sequence[Sequence[int]], n: int):
    """Reduced row-echelon form; returns (rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = field.inverse(mat[r][c])
        if inv != 1:
            mat[r] = [field.mul(inv, a) for a in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                coef = mat[i][c]
                mat[i] = [a ^ field.mul(coef, b) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def kernel_basis(field: Field, rows: Sequence[Sequence[int]], n: int, conjugate: bool = False):
    """Basis of {v : M v = 0} where M is `rows`, optionally conjugated."""
    if conjugate:
        mat = [tuple(field.conjugate(a) for a in r) for r in rows]
    else:
        mat = list(rows)
    reduced, pivots = rref(field, mat, n)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [0] * n
        v[free] = 1
        for j, p in enumerate(pivots):
            v[p] = reduced[j][free]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# packed-int helpers (shared with the census machinery)

def pack(field: Field, v: Sequence[int]) -> int:
    b = field.bits
    acc = 0
    for i, s in enumerate(v):
        acc |= s << (i * b)
    return acc


def unpack(field: Field, pv: int, n: int) -> tuple:
    b = field.bits
    mask = (1 << b) - 1
    return tuple(pv >> (i * b) & mask for i in range(n))


def symbol_mask(field: Field, n: int) -> int:
    """Mask with bit 1 at the low bit of every symbol slot."""
    b = field.bits
    m = 0
    for i in range(n):
        m |= 1 << (i * b)
    return m


def packed_weight(field: Field, pv: int, mask: int) -> int:
    """Number of nonzero symbols of a packed vector."""
    b = field.bits
    t = pv
    for sh in range(1, b):
        t |= pv >> sh
    return (t & mask).bit_count()


class LinearCode:
    """A k-dimensional length-n code held as a canonical RREF generator."""

    __slots__ = ("field", "n", "k", "rows")

    def __init__(self, field: Field, n: int, rows: tuple):
        # rows must already be canonical; use from_rows for arbitrary input
        self.field = field
        self.n = n
        self.rows = rows
        self.k = len(rows)

    @classmethod
    def from_rows(cls, field: Field, n: int, rows: Iterable[Sequence[int]]) -> "LinearCode":
        rows = [tuple(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise ValueError(f"row of length {len(r)}, expected {n}")
            for s in r:
                field.check(s)
        reduced, _ = rref(field, rows, n)
        return cls(field, n, tuple(reduced))

    @classmethod
    def zero(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, n, ())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field.q == other.field.q
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.n, self.rows))

    def __repr__(self) -> str:
        return f"LinearCode(GF({self.field.q}), n={self.n}, k={self.k})"

    # -- membership and duality --------------------------------------------

    def reduce(self, v: Sequence[int]) -> tuple:
        """Residue of v after elimination against the generator rows."""
        if len(v) != self.n:
            raise ValueError("length mismatch")
        w = list(v)
        for row in self.rows:
            p = next(i for i, s in enumerate(row) if s)
            if w[p]:
                coef = w[p]  # pivot entry of row is 1
                w = [a ^ self.field.mul(coef, b) for a, b in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence[int]) -> bool:
        for s in v:
            self.field.check(s)
        return not any(self.reduce(v))

    def dual(self, inner: str) -> "LinearCode":
        """Null space w.r.t. the chosen inner product."""
        check_inner(self.field, inner)
        basis = kernel_basis(self.field, self.rows, self.n, conjugate=(inner == HERMITIAN))
        return LinearCode.from_rows(self.field, self.n, basis)

    def is_self_orthogonal(self, inner: str) -> bool:
        check_inner(self.field, inner)
        return all(
            inner_product(self.field, u, v, inner) == 0
            for i, u in enumerate(self.rows)
            for v in self.rows[i:]
        )

    def is_self_dual(self, inner: str) -> bool:
        return 2 * self.k == self.n and self.is_self_orthogonal(inner)

    def is_type_ii(self) -> bool:
        """Doubly even self-dual, via the generator criterion."""
        if self.field.q != 2:
            raise ValueError("Type II is a binary notion")
        if not self.is_self_dual(EUCLIDEAN):
            return False
        return all(vec_weight(r) % 4 == 0 for r in self.rows)

    # -- enumeration --------------------------------------------------------

    def _check_budget(self, budget: int) -> None:
        if self.field.q**self.k > budget:
            raise EnumerationBudgetExceeded(
                f"{self.field.q}^{self.k} codewords exceeds budget {budget}"
            )

    def packed_rows(self) -> list:
        return [pack(self.field, r) for r in self.rows]

    def iter_packed(self) -> Iterator[int]:
        """All q^k codewords as packed ints (zero word first)."""
        if self.field.q == 2:
            rows = self.packed_rows()
            word = 0
            yield word
            for i in range(1, 1 << self.k):
                word ^= rows[(i & -i).bit_length() - 1]
                yield word
            return
        srows = [
            [pack(self.field, scalar_mul(self.field, c, r)) for c in self.field.elements()]
            for r in self.rows
        ]

        def rec(i: int, acc: int):
            if i == len(srows):
                yield acc
                return
            for packed in srows[i]:
                yield from rec(i + 1, acc ^ packed)

        yield from rec(0, 0)

    def words(self) -> Iterator[tuple]:
        for pv in self.iter_packed():
            yield unpack(self.field, pv, self.n)

    def weight_tally(self, budget: int = DEFAULT_BUDGET) -> dict:
        """Exact weight distribution {weight: count}."""
        self._check_budget(budget)
        mask = symbol_mask(self.field, self.n)
        tally: dict = {}
        for pv in self.iter_packed():
            w = packed_weight(self.field, pv, mask)
            tally[w] = tally.get(w, 0) + 1
        return tally

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        """Minimum Hamming weight over nonzero codewords, by enumeration."""
        if self.k == 0:
            raise ValueError("the zero code has no minimum distance")
        self._check_budget(budget)
        mask = symbol_mask(self.field, self.n)
        best = self.n + 1
        for pv in self.iter_packed():
            if pv == 0:
                continue
            w = packed_weight(self.field, pv, mask)
            if w < best:
                best = w
        return best

    # -- text format --------------------------------------------------------

    def dump(self) -> str:
        lines = [
            FORMAT_HEADER,
            f"q {self.field.q}",
            f"n {self.n}",
            f"k {self.k}",
        ]
        for row in self.rows:
            lines.append("".join(format(s, "x") for s in row))
        return "\n".join(lines) + "\n"

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dump())


def parse_symbols(field: Field, text: str) -> tuple:
    out = []
    for ch in text:
        try:
            s = int(ch, 16)
        except ValueError:
            raise ValueError(f"bad symbol {ch!r}") from None
        if ch != format(s, "x") or s >= field.q:
            raise ValueError(f"bad symbol {ch!r} for GF({field.q})")
        out.append(s)
    return tuple(out)


def loads(text: str) -> LinearCode:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != FORMAT_HEADER:
        raise ValueError(f"missing {FORMAT_HEADER!r} header")

    def field_line(idx: int, key: str) -> int:
        if idx >= len(lines):
            raise ValueError("truncated code file")
        parts = lines[idx].split()
        if len(parts) != 2 or parts[0] != key:
            raise ValueError(f"expected '{key} <int>', got {lines[idx]!r}")
        return int(parts[1])

    q = field_line(1, "q")
    n = field_line(2, "n")
    k = field_line(3, "k")
    field = field_for(q)
    body = lines[4:]
    if len(body) != k:
        raise ValueError(f"expected {k} generator rows, found {len(body)}")
    rows = []
    for ln in body:
        row = parse_symbols(field, ln)
        if len(row) != n:
            raise ValueError(f"row of length {len(row)}, expected {n}")
        rows.append(row)
    code = LinearCode.from_rows(field, n, rows)
    if code.k != k:
        raise ValueError(f"rows have rank {code.k}, header says k={k}")
    return code


def load(path) -> LinearCode:
    with open(path, "r", encoding="utf-8") as f:
        return loads(f.read())


def extended_hamming_code() -> LinearCode:
    """The [8,4,4] extended Hamming code (doubly even, self-dual)."""
    rows = [
        (1, 1, 1, 1, 1, 1, 1, 1),
        (0, 1, 0, 1, 0, 1, 0, 1),
        (0, 0, 1, 1, 0, 0, 1, 1),
        (0, 0, 0, 0, 1, 1, 1, 1),
    ]
    return LinearCode.from_rows(GF2, 8, rows)
