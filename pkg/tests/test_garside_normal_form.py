"""
Tests for braidkit.garside — left-greedy normal form and the word problem.

Test categories:
  - Small normal forms: Δ absorption, negative letters, single factors
  - Equality: Artin relations, commuting generators, non-equal pairs, strand mismatch
  - Classical identities: Δ-conjugation flips generators, the full twist is Δ² and central,
                          Δ_4 Ω Δ_4⁻¹ = Ω⁻¹, σ₂σ₁²σ₃⁻²σ₂⁻¹ = Ω⁻², (σ₁σ₂)³ = Δ₃²
  - NormalForm model: proper factors, left-weighting validator, to_word round trip
  - SimpleBraid: positive word, starting and finishing sets
  - Engine health: 500 seeded random words w·w⁻¹, chains of 20 Artin rewrites,
                   free reduction (hypothesis), long words and a timed run on 12 strands
"""

import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from braidkit.braids import (
    BraidWord,
    Permutation,
    StrandMismatchError,
    a_gen,
    artin_relations,
    big_omega,
    concat,
    delta,
    free_reduce,
    full_twist,
    generator,
    inverse,
    permutation_of,
    power,
    random_word,
)
from braidkit.garside import (
    NormalForm,
    SimpleBraid,
    are_equal,
    canonical_length,
    is_trivial,
    normal_form,
    to_word,
)

SEED = 20240611


def _w(strands: int, *letters: int) -> BraidWord:
    return BraidWord(strands=strands, letters=letters)


def _simple(*images: int) -> SimpleBraid:
    return SimpleBraid(permutation=Permutation(images=images))


@st.composite
def words(draw: st.DrawFn, max_strands: int = 6, max_size: int = 40) -> BraidWord:
    m = draw(st.integers(min_value=2, max_value=max_strands))
    letter = st.integers(min_value=1, max_value=m - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return BraidWord(strands=m, letters=tuple(draw(st.lists(letter, max_size=max_size))))


def _rewrite_once(rng: random.Random, w: BraidWord) -> BraidWord:
    """Apply one Artin relation to ``w``: substitute a side where it occurs, else insert a relator."""
    relation = rng.choice(artin_relations(w.strands))
    src, dst = (relation.lhs, relation.rhs) if rng.random() < 0.5 else (relation.rhs, relation.lhs)
    letters, size = w.letters, len(src)
    hits = [k for k in range(len(letters) - size + 1) if letters[k : k + size] == src.letters]
    if hits:
        k = rng.choice(hits)
        return BraidWord(strands=w.strands, letters=letters[:k] + dst.letters + letters[k + size :])
    relator = concat(src, inverse(dst))
    cut = rng.randint(0, len(letters))
    return BraidWord(strands=w.strands, letters=letters[:cut] + relator.letters + letters[cut:])


# ---------------------------------------------------------------------------
# Small normal forms
# ---------------------------------------------------------------------------


class TestSmallNormalForms:
    def test_empty_word_is_trivial(self) -> None:
        nf = normal_form(BraidWord.identity(4))
        assert nf.is_trivial
        assert nf.inf == 0
        assert nf.factors == ()

    def test_single_strand(self) -> None:
        assert is_trivial(BraidWord.identity(1))

    @pytest.mark.parametrize("m", range(2, 7))
    def test_delta_is_absorbed(self, m: int) -> None:
        nf = normal_form(delta(m))
        assert nf.inf == 1
        assert nf.factors == ()

    @pytest.mark.parametrize("m", range(2, 7))
    @pytest.mark.parametrize("k", [-3, -2, -1, 1, 2, 3])
    def test_full_twist_powers_are_absorbed(self, m: int, k: int) -> None:
        for word in (power(full_twist(m), k), power(delta(m), 2 * k)):
            nf = normal_form(word)
            assert nf.inf == 2 * k
            assert nf.factors == ()

    def test_inverse_generator_on_two_strands(self) -> None:
        nf = normal_form(_w(2, -1))
        assert nf.inf == -1
        assert nf.factors == ()

    def test_inverse_generator_on_three_strands(self) -> None:
        # σ₂⁻¹ = Δ⁻¹ · σ₂σ₁
        nf = normal_form(_w(3, -2))
        assert nf.inf == -1
        assert [f.permutation.images for f in nf.factors] == [(2, 3, 1)]

    def test_positive_simple_word(self) -> None:
        nf = normal_form(_w(3, 1, 2))
        assert nf.inf == 0
        assert [f.permutation.images for f in nf.factors] == [(3, 1, 2)]

    def test_free_insertions_ignored(self) -> None:
        assert normal_form(_w(4, 1, 3, -3, 2)) == normal_form(_w(4, 1, 2))

    def test_canonical_length(self) -> None:
        assert canonical_length(_w(3, 1, 2)) == 1
        assert canonical_length(_w(3, 1, 2, 2, 1)) == 2
        assert canonical_length(delta(3)) == 0

    def test_string_form(self) -> None:
        assert str(normal_form(_w(3, 1, 2))) == "D^0 . [3 1 2]"
        assert str(normal_form(power(delta(3), -2))) == "D^-2"


# ---------------------------------------------------------------------------
# Equality
# ---------------------------------------------------------------------------


class TestEquality:
    def test_braid_relation(self) -> None:
        assert normal_form(_w(3, 1, 2, 1)) == normal_form(_w(3, 2, 1, 2))

    def test_far_commutation(self) -> None:
        assert are_equal(_w(4, 1, 3), _w(4, 3, 1))

    def test_adjacent_generators_do_not_commute(self) -> None:
        assert not are_equal(_w(3, 1, 2), _w(3, 2, 1))

    def test_square_is_not_trivial(self) -> None:
        assert not is_trivial(_w(2, 1, 1))

    def test_strand_mismatch(self) -> None:
        with pytest.raises(StrandMismatchError) as exc_info:
            are_equal(BraidWord.identity(3), BraidWord.identity(4))
        assert exc_info.value.operation == "compare"

    @pytest.mark.parametrize("m", range(3, 8))
    def test_every_artin_relation_holds(self, m: int) -> None:
        for relation in artin_relations(m):
            assert are_equal(relation.lhs, relation.rhs), relation.label


# ---------------------------------------------------------------------------
# Classical identities
# ---------------------------------------------------------------------------


class TestClassicalIdentities:
    @pytest.mark.parametrize("m", range(2, 7))
    def test_delta_conjugation_flips_generators(self, m: int) -> None:
        d = delta(m)
        for i in range(1, m):
            assert are_equal(concat(d, generator(i, m), inverse(d)), generator(m - i, m))

    @pytest.mark.parametrize("m", range(2, 7))
    def test_full_twist_is_delta_squared(self, m: int) -> None:
        assert are_equal(full_twist(m), power(delta(m), 2))

    @pytest.mark.parametrize("m", range(2, 7))
    def test_full_twist_is_central(self, m: int) -> None:
        f = full_twist(m)
        for i in range(1, m):
            s = generator(i, m)
            assert are_equal(concat(f, s), concat(s, f))

    def test_full_twist_on_three_strands(self) -> None:
        f = concat(a_gen(1, 2, 3), a_gen(1, 3, 3), a_gen(2, 3, 3))
        assert are_equal(f, power(delta(3), 2))

    def test_delta_four_inverts_big_omega(self) -> None:
        d4, big = delta(4), big_omega()
        assert are_equal(concat(d4, big, inverse(d4)), inverse(big))

    def test_big_omega_square_chain(self) -> None:
        assert are_equal(_w(4, 2, 1, 1, -3, -3, -2), power(big_omega(), -2))

    def test_sigma_one_sigma_two_cubed(self) -> None:
        assert are_equal(power(_w(3, 1, 2), 3), full_twist(3))

    @pytest.mark.parametrize("m", range(3, 7))
    @pytest.mark.parametrize("sign", [1, -1])
    def test_conjugated_braid_relation(self, m: int, sign: int) -> None:
        # σ_i^ε σ_{i+1} σ_i^{-ε} = σ_{i+1}^{-ε} σ_i σ_{i+1}^{ε}
        for i in range(1, m - 1):
            lhs = _w(m, sign * i, i + 1, -sign * i)
            rhs = _w(m, -sign * (i + 1), i, sign * (i + 1))
            assert are_equal(lhs, rhs)
            assert not are_equal(lhs, _w(m, i + 1))


# ---------------------------------------------------------------------------
# NormalForm and SimpleBraid models
# ---------------------------------------------------------------------------


class TestNormalFormModel:
    def test_identity_factor_rejected(self) -> None:
        with pytest.raises(ValidationError):
            NormalForm(strands=3, inf=0, factors=(_simple(1, 2, 3),))

    def test_delta_factor_rejected(self) -> None:
        with pytest.raises(ValidationError):
            NormalForm(strands=3, inf=0, factors=(_simple(3, 2, 1),))

    def test_non_left_weighted_pair_rejected(self) -> None:
        # σ₁ then σ₂: σ₂ starts the second factor but does not finish the first
        with pytest.raises(ValidationError):
            NormalForm(strands=3, inf=0, factors=(_simple(2, 1, 3), _simple(1, 3, 2)))

    def test_factor_strands_must_match(self) -> None:
        with pytest.raises(ValidationError):
            NormalForm(strands=4, inf=0, factors=(_simple(2, 1, 3),))

    def test_sup_and_inf(self) -> None:
        nf = normal_form(concat(power(delta(3), -1), _w(3, 1, 2, 2, 1)))
        assert nf.inf == -1
        assert nf.sup == nf.inf + nf.canonical_length

    @pytest.mark.parametrize("seed", range(10))
    def test_to_word_round_trip(self, seed: int) -> None:
        rng = random.Random(seed)
        w = random_word(rng, 5, 25)
        nf = normal_form(w)
        assert are_equal(to_word(nf), w)
        assert normal_form(to_word(nf)) == nf


class TestSimpleBraid:
    @pytest.mark.parametrize(
        "images", [(2, 3, 1), (3, 1, 2), (3, 2, 1), (2, 4, 1, 3), (4, 3, 2, 1), (1, 2, 3)]
    )
    def test_word_realizes_permutation(self, images: tuple[int, ...]) -> None:
        simple = _simple(*images)
        word = simple.word()
        assert word.is_positive
        assert len(word) == simple.length
        assert permutation_of(word) == simple.permutation

    def test_reversal_is_delta(self) -> None:
        assert _simple(4, 3, 2, 1).is_delta
        assert not _simple(2, 1, 3).is_delta

    def test_starting_and_finishing_sets(self) -> None:
        # σ₁σ₂: starts only with σ₁, ends only with σ₂
        simple = _simple(3, 1, 2)
        assert simple.starting_set() == frozenset({1})
        assert simple.finishing_set() == frozenset({2})


# ---------------------------------------------------------------------------
# Engine health
# ---------------------------------------------------------------------------


class TestEngineHealth:
    def test_random_words_times_inverse_are_trivial(self) -> None:
        rng = random.Random(SEED)
        for _ in range(500):
            strands = rng.randint(2, 6)
            w = random_word(rng, strands, rng.randint(0, 40))
            assert is_trivial(concat(w, inverse(w))), str(w)

    @settings(max_examples=30, deadline=None)
    @given(st.randoms(use_true_random=False), st.integers(min_value=3, max_value=6))
    def test_chains_of_artin_rewrites_keep_normal_form(
        self, rng: random.Random, strands: int
    ) -> None:
        w = random_word(rng, strands, rng.randint(5, 30))
        expected = normal_form(w)
        rewritten = w
        for _ in range(20):
            rewritten = _rewrite_once(rng, rewritten)
            assert normal_form(rewritten) == expected, str(rewritten)

    @given(words())
    def test_free_reduction_keeps_the_braid(self, w: BraidWord) -> None:
        assert are_equal(w, free_reduce(w))
        assert normal_form(w) == normal_form(free_reduce(w))

    @pytest.mark.parametrize("seed", range(5))
    def test_long_words_on_eight_strands(self, seed: int) -> None:
        w = random_word(random.Random(seed), 8, 400)
        nf = normal_form(w)
        assert normal_form(to_word(nf)) == nf
        assert is_trivial(concat(w, inverse(to_word(nf))))


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(3))
def test_long_word_on_twelve_strands_under_a_second(seed: int) -> None:
    w = random_word(random.Random(seed), 12, 2000)
    start = time.perf_counter()
    nf = normal_form(w)
    elapsed = time.perf_counter() - start
    assert nf.strands == 12
    assert elapsed < 1.0, f"{elapsed:.2f}s"
