"""
Tests for braidkit.mixed — membership in B_{n,n} and B²_{n,n}, the block sign and ε.

Test categories:
  - MixedContext: blocks, block_of bounds, inflation
  - Membership: in_bnn, in_bnn2 on generators, Δ, ω_n and Ω
  - Block sign: pi_sign values, NotInB2nnError, product law on seeded B²_{n,n} words
  - ε: generator table, ε(Δ²) = n² mod 2, NotInBnnError, strand mismatch
  - Homomorphism: additivity and Δ-invariance on 300 seeded block words
"""

import random

import pytest
from pydantic import ValidationError

from braidkit.braids import (
    BraidWord,
    StrandMismatchError,
    a_gen,
    big_omega,
    concat,
    delta,
    full_twist,
    generator,
    inverse,
    omega,
)
from braidkit.mixed import (
    MixedContext,
    NotInB2nnError,
    NotInBnnError,
    bnn_generators,
    epsilon,
    epsilon_table,
    in_bnn,
    in_bnn2,
    pi_sign,
    random_b2nn_word,
    random_block_word,
)

SEED = 20240611


# ---------------------------------------------------------------------------
# MixedContext
# ---------------------------------------------------------------------------


class TestMixedContext:
    def test_blocks(self) -> None:
        ctx = MixedContext(n=3)
        assert ctx.strands == 6
        assert list(ctx.block1) == [1, 2, 3]
        assert list(ctx.block2) == [4, 5, 6]
        assert [ctx.block_of(p) for p in range(1, 7)] == [1, 1, 1, 2, 2, 2]

    @pytest.mark.parametrize("position", [0, 5])
    def test_block_of_out_of_range(self, position: int) -> None:
        with pytest.raises(ValueError):
            MixedContext(n=2).block_of(position)

    def test_block_size_must_be_positive(self) -> None:
        with pytest.raises(ValidationError):
            MixedContext(n=0)

    def test_inflate(self) -> None:
        assert MixedContext(n=2).inflate(3) == MixedContext(n=6)
        with pytest.raises(ValueError):
            MixedContext(n=2).inflate(0)


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


class TestMembership:
    def test_block_generators_preserve_blocks(self) -> None:
        ctx = MixedContext(n=2)
        assert in_bnn(generator(1, 4), ctx)
        assert in_bnn(generator(3, 4), ctx)
        assert in_bnn(a_gen(1, 4, 4), ctx)

    def test_middle_crossing_leaves_both_groups(self) -> None:
        ctx = MixedContext(n=2)
        s2 = generator(2, 4)
        assert not in_bnn(s2, ctx)
        assert not in_bnn2(s2, ctx)

    def test_middle_square_is_block_preserving(self) -> None:
        assert in_bnn(generator(2, 4, exponent=2), MixedContext(n=2))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_delta_and_omega_swap_blocks(self, n: int) -> None:
        ctx = MixedContext(n=n)
        for w in (delta(2 * n), omega(n)):
            assert in_bnn2(w, ctx)
            assert not in_bnn(w, ctx)

    def test_big_omega_swaps_blocks(self) -> None:
        ctx = MixedContext(n=2)
        assert in_bnn2(big_omega(), ctx)
        assert not in_bnn(big_omega(), ctx)

    def test_strand_mismatch(self) -> None:
        with pytest.raises(StrandMismatchError):
            in_bnn(BraidWord.identity(3), MixedContext(n=2))


# ---------------------------------------------------------------------------
# Block sign
# ---------------------------------------------------------------------------


class TestPiSign:
    def test_identity_is_zero(self) -> None:
        assert pi_sign(BraidWord.identity(4), MixedContext(n=2)) == 0

    @pytest.mark.parametrize("n", range(1, 5))
    def test_swaps_are_one(self, n: int) -> None:
        ctx = MixedContext(n=n)
        assert pi_sign(delta(2 * n), ctx) == 1
        assert pi_sign(omega(n), ctx) == 1

    def test_full_twist_is_zero(self) -> None:
        assert pi_sign(full_twist(6), MixedContext(n=3)) == 0

    def test_not_in_b2nn(self) -> None:
        with pytest.raises(NotInB2nnError) as exc_info:
            pi_sign(generator(2, 4), MixedContext(n=2))
        assert exc_info.value.n == 2
        assert exc_info.value.permutation.images == (1, 3, 2, 4)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_random_b2nn_words(self, n: int) -> None:
        rng = random.Random(SEED)
        ctx = MixedContext(n=n)
        for _ in range(50):
            block = random_block_word(rng, ctx, rng.randint(0, 8))
            assert pi_sign(block, ctx) == 0
            assert pi_sign(concat(block, delta(2 * n)), ctx) == 1
            assert in_bnn2(random_b2nn_word(rng, ctx, rng.randint(0, 8)), ctx)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_product_law(self, n: int) -> None:
        rng = random.Random(SEED + n)
        ctx = MixedContext(n=n)
        for _ in range(100):
            a = random_b2nn_word(rng, ctx, rng.randint(0, 8))
            b = random_b2nn_word(rng, ctx, rng.randint(0, 8))
            assert pi_sign(concat(a, b), ctx) == (pi_sign(a, ctx) + pi_sign(b, ctx)) % 2

    def test_two_swaps_cancel(self) -> None:
        ctx = MixedContext(n=2)
        assert pi_sign(big_omega(), ctx) == 1
        assert pi_sign(concat(delta(4), big_omega()), ctx) == 0
        assert in_bnn(concat(delta(4), big_omega()), ctx)


# ---------------------------------------------------------------------------
# Epsilon
# ---------------------------------------------------------------------------


class TestEpsilon:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_generator_table(self, n: int) -> None:
        ctx = MixedContext(n=n)
        table = epsilon_table(ctx)
        for label, word in bnn_generators(ctx).items():
            assert epsilon(word, ctx) == table[label], label

    def test_table_for_two_blocks_of_two(self) -> None:
        table = epsilon_table(MixedContext(n=2))
        assert table == {
            "s1": 0,
            "s3": 0,
            "A1,2": 0,
            "A1,3": 1,
            "A2,3": 1,
            "A1,4": 1,
            "A2,4": 1,
            "A3,4": 0,
        }

    def test_inverse_has_same_value(self) -> None:
        ctx = MixedContext(n=2)
        assert epsilon(inverse(a_gen(1, 3, 4)), ctx) == 1

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 0), (3, 1), (4, 0)])
    def test_full_twist(self, n: int, expected: int) -> None:
        assert epsilon(full_twist(2 * n), MixedContext(n=n)) == expected

    def test_not_in_bnn(self) -> None:
        with pytest.raises(NotInBnnError) as exc_info:
            epsilon(omega(2), MixedContext(n=2))
        assert exc_info.value.n == 2

    def test_strand_mismatch(self) -> None:
        with pytest.raises(StrandMismatchError):
            epsilon(BraidWord.identity(6), MixedContext(n=2))


class TestEpsilonHomomorphism:
    @pytest.mark.parametrize("n", [2, 3])
    def test_additive_on_random_block_words(self, n: int) -> None:
        rng = random.Random(SEED)
        ctx = MixedContext(n=n)
        for _ in range(300):
            u = random_block_word(rng, ctx, rng.randint(0, 6))
            v = random_block_word(rng, ctx, rng.randint(0, 6))
            assert epsilon(concat(u, v), ctx) == (epsilon(u, ctx) + epsilon(v, ctx)) % 2

    @pytest.mark.parametrize("n", [2, 3])
    def test_delta_invariant(self, n: int) -> None:
        rng = random.Random(SEED + n)
        ctx = MixedContext(n=n)
        d = delta(2 * n)
        for _ in range(300):
            w = random_block_word(rng, ctx, rng.randint(0, 6))
            assert epsilon(concat(d, w, inverse(d)), ctx) == epsilon(w, ctx)
