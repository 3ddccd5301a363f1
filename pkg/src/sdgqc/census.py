"""Exhaustive enumeration and seeded random sampling of self-dual codes.

The census is the ground-truth oracle for the counting formulas: it builds
every self-dual code of a given (small) length by depth-first isotropic
extension, de-duplicating states by canonical RREF.  The sampler grows a
random self-dual code one uniformly chosen isotropic vector at a time; the
generator is Python's Mersenne Twister (random.Random), seeded with a
64-bit integer, which is the repository's fixed reproducibility contract.

Binary codes use the Euclidean inner product, GF(4)/GF(16) the Hermitian
one, throughout.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Optional, Sequence

from .fields import Field, GF16, field_for
from .codes import (
    EUCLIDEAN,
    HERMITIAN,
    LinearCode,
    inner_product,
    kernel_basis,
    pack,
    rref,
    scalar_mul,
    symbol_mask,
    packed_weight,
    unpack,
    vec_add,
)


class CensusInfeasible(Exception):
    """Raised when an exhaustive enumeration would exceed its budget."""


def designated_inner(field: Field) -> str:
    return EUCLIDEAN if field.q == 2 else HERMITIAN


def _is_isotropic(field: Field, v, inner: str) -> bool:
    return inner_product(field, v, v, inner) == 0


# ---------------------------------------------------------------------------
# census


def _packed_scalar_rows(field: Field, row, n: int):
    """Packed scalar multiples [c*row for c in field], indexed by c."""
    return [pack(field, scalar_mul(field, c, row)) for c in field.elements()]


def _span_packed(field: Field, rows, n: int) -> set:
    """All packed vectors in the row span."""
    out = {0}
    for row in rows:
        mults = _packed_scalar_rows(field, row, n)[1:]
        out |= {e ^ m for e in out for m in mults}
    return out


def _iso_test(field: Field, n: int, type2: bool):
    mask = symbol_mask(field, n)
    if field.q == 2:
        if type2:
            return lambda pv: pv.bit_count() % 4 == 0
        return lambda pv: pv.bit_count() % 2 == 0
    if field.q == 4:
        # v.conj(v) = v^3 = 1 for nonzero v: isotropic iff even support
        return lambda pv: packed_weight(field, pv, mask) % 2 == 0
    f5 = [GF16.pow(a, 5) for a in range(16)]

    def iso16(pv: int) -> bool:
        acc = 0
        while pv:
            acc ^= f5[pv & 0xF]
            pv >>= 4
        return acc == 0

    return iso16


def census(
    q: int,
    n: int,
    *,
    type2: bool = False,
    containing: Optional[Sequence[int]] = None,
    with_codes: bool = False,
    code_limit: int = 10**6,
    state_limit: int = 10**8,
):
    """Exact count (and optionally the list) of self-dual codes of length n.

    Returns (count, codes) where codes is None unless with_codes is set.
    """
    if q not in (2, 16):
        raise ValueError("census supports q in {2, 16}")
    field = field_for(q)
    inner = designated_inner(field)
    if n < 2 or n % 2:
        raise ValueError("length must be a positive even integer")
    if type2 and (q != 2 or n % 8):
        raise ValueError("Type II censuses need q=2 and length divisible by 8")

    # feasibility: the final level alone has this many states
    from . import mass

    if q == 2:
        expected = mass.t_type2(n) if type2 else mass.n_sd_binary(n)
    else:
        expected = mass.n_sd_hermitian16(n)
    if expected > code_limit:
        raise CensusInfeasible(f"about {expected} codes, limit {code_limit}")

    iso = _iso_test(field, n, type2)
    start_rows: tuple = ()
    if containing is not None:
        v = tuple(containing)
        if len(v) != n:
            raise ValueError("containing-vector length mismatch")
        for s in v:
            field.check(s)
        if not any(v):
            raise ValueError("containing-vector must be nonzero")
        if not iso(pack(field, v)) or not _is_isotropic(field, v, inner):
            return 0, ([] if with_codes else None)
        start_rows = tuple(rref(field, [v], n)[0])

    level = {tuple(pack(field, r) for r in start_rows): start_rows}
    states = 0
    for dim in range(len(start_rows), n // 2):
        next_level: dict = {}
        for rows in level.values():
            states += 1
            if states > state_limit:
                raise CensusInfeasible(f"state budget {state_limit} exceeded")
            elems = _span_packed(field, rows, n)
            dual = kernel_basis(field, rows, n, conjugate=(inner == HERMITIAN))
            dual_span = _span_packed(field, dual, n)
            seen: set = set()
            for pv in dual_span:
                if pv in seen or pv in elems or not iso(pv):
                    continue
                v = unpack(field, pv, n)
                new_rows, _ = rref(field, list(rows) + [v], n)
                new_elems = set(elems)
                for m in _packed_scalar_rows(field, v, n)[1:]:
                    new_elems |= {e ^ m for e in elems}
                seen |= new_elems
                key = tuple(pack(field, r) for r in new_rows)
                next_level[key] = tuple(new_rows)
        level = next_level
    count = len(level)
    codes = None
    if with_codes:
        codes = sorted(
            (LinearCode(field, n, rows) for rows in level.values()),
            key=lambda c: c.rows,
        )
    return count, codes


# ---------------------------------------------------------------------------
# words of the quintic image, by type


_SYMBOL_PATTERN = None


def _symbol_patterns():
    """5-bit block pattern of quintic_map(0, s) for a single coordinate s."""
    global _SYMBOL_PATTERN
    if _SYMBOL_PATTERN is None:
        pats = []
        for s in range(16):
            a0, a1, a2, a3 = s & 1, s >> 1 & 1, s >> 2 & 1, s >> 3 & 1
            bits = (a0, a0 ^ a1, a1 ^ a2, a2 ^ a3, a3)
            pats.append(sum(b << j for j, b in enumerate(bits)))
        _SYMBOL_PATTERN = tuple(pats)
    return _SYMBOL_PATTERN


@lru_cache(maxsize=None)
def _type_weight_tables(ell: int, restricted: bool):
    """Brute-force weight tables for the three word types of the quintic
    image at block length ell: (c1!=0, c2!=0), (c1=0, c2!=0), (c1!=0, c2=0).

    With restricted=True only even-weight x and Hermitian-isotropic s are
    enumerated.
    """
    if ell < 1 or 2 ** (5 * ell) > 2**22:
        raise CensusInfeasible("brute-force type count needs 2^(5*ell) <= 2^22")
    pats = _symbol_patterns()
    f5 = [GF16.pow(a, 5) for a in range(16)]
    # contribution of symbol c at coordinate i, in block order (bit j*ell+i)
    contrib = [
        [sum((pats[c] >> j & 1) << (j * ell + i) for j in range(5)) for c in range(16)]
        for i in range(ell)
    ]
    x_rep = [sum(((x >> i) & 1) << (j * ell + i) for i in range(ell) for j in range(5))
             for x in range(1 << ell)]
    t1: dict = {}
    t2: dict = {}
    t3: dict = {}
    for sint in range(16**ell):
        pattern = 0
        acc5 = 0
        t = sint
        for i in range(ell):
            c = t & 0xF
            t >>= 4
            pattern |= contrib[i][c]
            acc5 ^= f5[c]
        if restricted and acc5:
            continue
        s_zero = sint == 0
        for x in range(1 << ell):
            if restricted and (x.bit_count() & 1):
                continue
            x_zero = x == 0
            if x_zero and s_zero:
                continue
            w = (pattern ^ x_rep[x]).bit_count()
            if x_zero:
                t2[w] = t2.get(w, 0) + 1
            elif s_zero:
                t3[w] = t3.get(w, 0) + 1
            else:
                t1[w] = t1.get(w, 0) + 1
    return t1, t2, t3


def count_words_by_type(ell: int, d: int, restricted: bool = False):
    """(a1, a2, a3): number of weight-d quintic-image words of each type."""
    t1, t2, t3 = _type_weight_tables(ell, restricted)
    return t1.get(d, 0), t2.get(d, 0), t3.get(d, 0)


# ---------------------------------------------------------------------------
# sampling


def _reduce_against(field: Field, rows, v):
    w = list(v)
    for row in rows:
        p = next(i for i, s in enumerate(row) if s)
        if w[p]:
            coef = w[p]
            w = [a ^ field.mul(coef, b) for a, b in zip(w, row)]
    return tuple(w)


def sample_self_dual(q: int, n: int, seed: int, max_tries: int = 100000) -> LinearCode:
    """A uniformly random self-dual code, bit-exact reproducible per seed.

    Grows the code by repeatedly drawing a uniform element of the current
    dual until it is isotropic and outside the current span.
    """
    field = field_for(q)
    inner = designated_inner(field)
    if n < 2 or n % 2:
        raise ValueError("length must be a positive even integer")
    rng = random.Random(seed)
    rows: list = []
    zero = (0,) * n
    while len(rows) < n // 2:
        dual = kernel_basis(field, rows, n, conjugate=(inner == HERMITIAN))
        for _ in range(max_tries):
            w = zero
            for b in dual:
                c = rng.randrange(q)
                if c:
                    w = vec_add(w, scalar_mul(field, c, b))
            if not any(w):
                continue
            if not _is_isotropic(field, w, inner):
                continue
            if not any(_reduce_against(field, rows, w)):
                continue
            rows, _ = rref(field, rows + [w], n)
            break
        else:
            raise RuntimeError("sampler failed to extend; raise max_tries")
    return LinearCode(field, n, tuple(rows))
