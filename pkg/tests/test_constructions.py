import random

import pytest

from sdgqc import census
from sdgqc.codes import EUCLIDEAN, HERMITIAN, LinearCode, extended_hamming_code, vec_add
from sdgqc.constructions import (
    block_rotate,
    crt_components,
    cubic_code,
    cubic_map,
    deinterleave,
    direct_sum_gqc,
    interleave,
    is_gqc_invariant,
    quintic_code,
    quintic_map,
)
from sdgqc.fields import GF2, GF4, GF16


def bits(s):
    return tuple(int(c) for c in s)


def rand_vec(rng, q, n):
    return tuple(rng.randrange(q) for _ in range(n))


def test_cubic_map_examples():
    assert cubic_map(bits("11"), (0, 0)) == bits("111111")
    # s = (1, w): a = 10, b = 01
    assert cubic_map(bits("00"), (1, 2)) == bits("100111")


def test_cubic_map_is_linear():
    rng = random.Random(1)
    for _ in range(100):
        ell = rng.randrange(1, 7)
        x, xp = rand_vec(rng, 2, ell), rand_vec(rng, 2, ell)
        s, sp = rand_vec(rng, 4, ell), rand_vec(rng, 4, ell)
        lhs = vec_add(cubic_map(x, s), cubic_map(xp, sp))
        assert lhs == cubic_map(vec_add(x, xp), vec_add(s, sp))


def test_quintic_map_examples():
    assert quintic_map((0,), (1,)) == (1, 1, 0, 0, 0)
    assert quintic_map((1,), (0,)) == (1, 1, 1, 1, 1)


def test_quintic_blocks_sum_to_x():
    rng = random.Random(2)
    for _ in range(100):
        ell = rng.randrange(1, 7)
        x = rand_vec(rng, 2, ell)
        s = rand_vec(rng, 16, ell)
        out = quintic_map(x, s)
        acc = (0,) * ell
        for j in range(5):
            acc = vec_add(acc, out[j * ell : (j + 1) * ell])
        assert acc == x


def test_map_length_mismatch():
    with pytest.raises(ValueError):
        cubic_map((0, 1), (1,))
    with pytest.raises(ValueError):
        quintic_map((0,), (1, 2))


def test_cubic_code_example():
    c1 = LinearCode.from_rows(GF2, 2, [bits("11")])
    c2 = LinearCode.from_rows(GF4, 2, [(1, 1)])
    c = cubic_code(c1, c2)
    assert (c.n, c.k) == (6, 3)
    # direct enumeration of the 8 images
    assert c.weight_tally() == {0: 1, 2: 3, 4: 3, 6: 1}
    assert c.min_distance() == 2 and c.contains(bits("001100"))


def test_cubic_code_of_zero_codes_is_zero():
    c = cubic_code(LinearCode.zero(GF2, 3), LinearCode.zero(GF4, 3))
    assert c.k == 0


def test_cubic_code_rejects_wrong_field():
    c1 = LinearCode.from_rows(GF2, 2, [bits("11")])
    c16 = LinearCode.from_rows(GF16, 2, [(1, 1)])
    with pytest.raises(ValueError):
        cubic_code(c1, c16)


def test_quintic_code_example():
    c1 = LinearCode.from_rows(GF2, 2, [bits("11")])
    c2 = LinearCode.from_rows(GF16, 2, [(1, 1)])
    c = quintic_code(c1, c2)
    assert (c.n, c.k) == (10, 5)
    assert c.min_distance() == 2
    # witness: s with expansion (1,0,1,0) gives blocks (1,1,1,1,0)
    w = quintic_map(bits("11"), (0x5, 0x5))
    assert sum(w) == 2 and c.contains(w)


def test_quintic_code_with_zero_gf16_component():
    c1 = LinearCode.from_rows(GF2, 2, [bits("11")])
    c = quintic_code(c1, LinearCode.zero(GF16, 2))
    assert set(c.weight_tally()) == {0, 10}  # 5-fold repetition of c1


def test_dimension_formulas():
    rng = random.Random(3)
    for _ in range(20):
        ell = rng.randrange(1, 5)
        c1 = LinearCode.from_rows(GF2, ell, [rand_vec(rng, 2, ell) for _ in range(2)])
        c4 = LinearCode.from_rows(GF4, ell, [rand_vec(rng, 4, ell) for _ in range(2)])
        c16 = LinearCode.from_rows(GF16, ell, [rand_vec(rng, 16, ell) for _ in range(2)])
        assert cubic_code(c1, c4).k == c1.k + 2 * c4.k
        assert quintic_code(c1, c16).k == c1.k + 4 * c16.k


def test_crt_identity():
    rng = random.Random(4)
    scale = lambda s: tuple(GF16.mul(0x3, si) for si in s)  # 1 + alpha
    for _ in range(100):
        ell = rng.randrange(1, 7)
        x = rand_vec(rng, 2, ell)
        s = rand_vec(rng, 16, ell)
        assert crt_components(quintic_map(x, s)) == (x, scale(s))
    assert crt_components((0,) * 10) == ((0, 0), (0, 0))
    assert crt_components((1, 1, 1, 1, 1)) == ((1,), (0,))


def test_block_rotate():
    assert block_rotate(bits("100111"), 3) == bits("111001")
    v = bits("1011001")
    out = v
    for _ in range(7):
        out = block_rotate(out, 7)
    assert out == v
    with pytest.raises(ValueError):
        block_rotate(bits("101"), 2)


def test_block_rotate_preserves_constructed_codes():
    rng = random.Random(6)
    for _ in range(20):
        c1 = census.sample_self_dual(2, 4, rng.getrandbits(63))
        c4 = census.sample_self_dual(4, 4, rng.getrandbits(63))
        c16 = census.sample_self_dual(16, 4, rng.getrandbits(63))
        cc = cubic_code(c1, c4)
        qc = quintic_code(c1, c16)
        for code, b in [(cc, 3), (qc, 5)]:
            for row in code.rows:
                assert code.contains(block_rotate(row, b))


def test_interleave():
    assert interleave(tuple(range(6)), 2, 3) == (0, 2, 4, 1, 3, 5)
    rng = random.Random(7)
    for _ in range(30):
        ell, m = rng.randrange(1, 6), rng.randrange(1, 6)
        v = rand_vec(rng, 2, ell * m)
        assert deinterleave(interleave(v, ell, m), ell, m) == v


def test_gqc_invariance():
    # any cyclic code is GQC with the one-section profile
    cyc = LinearCode.from_rows(GF2, 4, [bits("1100"), bits("0110"), bits("0011")])
    assert is_gqc_invariant(cyc, (4,))
    assert not is_gqc_invariant(LinearCode.from_rows(GF2, 4, [bits("1000")]), (4,))
    rng = random.Random(8)
    for ell in (2, 4):
        c1 = census.sample_self_dual(2, ell, rng.getrandbits(63))
        c4 = census.sample_self_dual(4, ell, rng.getrandbits(63))
        cc = cubic_code(c1, c4)
        rows = [interleave(r, ell, 3) for r in cc.rows]
        icc = LinearCode.from_rows(GF2, cc.n, rows)
        assert is_gqc_invariant(icc, (3,) * ell)


def _interleaved(code, ell, m):
    rows = [interleave(r, ell, m) for r in code.rows]
    return LinearCode.from_rows(GF2, code.n, rows)


def test_direct_sum_gqc():
    rng = random.Random(9)
    for ell in (2, 4):
        a = _interleaved(
            cubic_code(
                census.sample_self_dual(2, ell, rng.getrandbits(63)),
                census.sample_self_dual(4, ell, rng.getrandbits(63)),
            ),
            ell,
            3,
        )
        b = _interleaved(
            quintic_code(
                census.sample_self_dual(2, ell, rng.getrandbits(63)),
                census.sample_self_dual(16, ell, rng.getrandbits(63)),
            ),
            ell,
            5,
        )
        total, profile = direct_sum_gqc(a, b)
        assert profile == (3,) * ell + (5,) * ell
        assert total.n == 8 * ell and total.k == a.k + b.k
        assert total.is_self_dual(EUCLIDEAN)
        assert is_gqc_invariant(total, profile)
        assert total.min_distance() == min(a.min_distance(), b.min_distance())
    z3 = LinearCode.zero(GF2, 6)
    z5 = LinearCode.zero(GF2, 10)
    assert direct_sum_gqc(z3, z5)[0].k == 0
    with pytest.raises(ValueError):
        direct_sum_gqc(LinearCode.zero(GF2, 6), LinearCode.zero(GF2, 15))


def test_duality_preservation_and_failure():
    rng = random.Random(10)
    for ell in (2, 4):
        c1 = census.sample_self_dual(2, ell, rng.getrandbits(63))
        c4 = census.sample_self_dual(4, ell, rng.getrandbits(63))
        c16 = census.sample_self_dual(16, ell, rng.getrandbits(63))
        assert cubic_code(c1, c4).is_self_dual(EUCLIDEAN)
        assert quintic_code(c1, c16).is_self_dual(EUCLIDEAN)
        # perturb one input so it stops being self-dual
        bad = LinearCode.from_rows(GF2, ell, [(1,) + (0,) * (ell - 1)])
        assert not bad.is_self_dual(EUCLIDEAN)
        assert not cubic_code(bad, c4).is_self_dual(EUCLIDEAN)
        assert not quintic_code(bad, c16).is_self_dual(EUCLIDEAN)
        bad4 = LinearCode.from_rows(GF4, ell, [(1,) + (0,) * (ell - 1)])
        assert not cubic_code(c1, bad4).is_self_dual(EUCLIDEAN)


def test_type_ii_preservation():
    rng = random.Random(12)
    ham = extended_hamming_code()
    assert ham.is_type_ii()
    c4 = census.sample_self_dual(4, 8, rng.getrandbits(63))
    c16 = census.sample_self_dual(16, 8, rng.getrandbits(63))
    assert cubic_code(ham, c4).is_type_ii()
    assert quintic_code(ham, c16).is_type_ii()
    # a Type I C1 does not give a Type II output
    type1 = LinearCode.from_rows(
        GF2, 8, [bits("11000000"), bits("00110000"), bits("00001100"), bits("00000011")]
    )
    assert type1.is_self_dual(EUCLIDEAN) and not type1.is_type_ii()
    assert not cubic_code(type1, c4).is_type_ii()
    assert not quintic_code(type1, c16).is_type_ii()


def test_quintic_type_iii_weights_divisible_by_five():
    rng = random.Random(13)
    for _ in range(50):
        ell = rng.randrange(1, 7)
        x = rand_vec(rng, 2, ell)
        w = sum(quintic_map(x, (0,) * ell))
        assert w == 5 * sum(x)
