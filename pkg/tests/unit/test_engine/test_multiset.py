"""Tests for multisets, symbols and the stm encoding."""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rautomata.core import CountOverflowError, CountUnderflowError, FormatError
from rautomata.engine import (
    EMPTY,
    MAX_COUNT,
    Multiset,
    Symbol,
    format_multiset,
    parse_multiset,
    parse_symbols,
    stm,
    unstm,
)

A, B, C = Symbol("a"), Symbol("b"), Symbol("c")

symbols = st.sampled_from([A, B, C, Symbol("a", True), Symbol("x1")])
multisets = st.dictionaries(symbols, st.integers(min_value=0, max_value=50)).map(Multiset)


class TestSymbol:
    """Test symbol naming rules and ordering."""

    def test_hat_is_a_distinct_symbol(self):
        assert Symbol("a") != Symbol("a", True)
        assert Symbol("a").hatted() == Symbol("a", True)
        assert Symbol("a", True).plain() == Symbol("a")
        assert str(Symbol("p0", True)) == "p0^"

    def test_primes_belong_to_the_name(self):
        assert Symbol.parse("a'") == Symbol("a'")
        assert sorted([Symbol("b"), Symbol("a'"), Symbol("a")]) == [Symbol("a"), Symbol("a'"), Symbol("b")]

    @pytest.mark.parametrize("name", ["", "-", "λ", "a b", "a|b", "a#", "a:b"])
    def test_reserved_names_are_rejected(self, name):
        with pytest.raises(ValueError):
            Symbol(name)

    def test_parse_reports_position(self):
        with pytest.raises(FormatError) as exc_info:
            Symbol.parse("a|", line=3, column=7)
        assert (exc_info.value.line, exc_info.value.column) == (3, 7)


class TestMultisetArithmetic:
    """Test the checked multiset operations."""

    def test_missing_symbols_count_zero(self):
        m = Multiset.of(A, A, B)
        assert m[A] == 2
        assert m[C] == 0
        assert C not in m
        assert m.weight == 3
        assert m.support == frozenset({A, B})

    def test_zero_counts_are_not_stored(self):
        assert Multiset({A: 0, B: 1}) == Multiset.of(B)
        assert len(Multiset({A: 0})) == 0

    def test_negative_counts_are_rejected(self):
        with pytest.raises(CountUnderflowError):
            Multiset({A: -1})

    def test_subtract_requires_inclusion(self):
        with pytest.raises(CountUnderflowError):
            Multiset.of(A) - Multiset.of(A, A)

    def test_intersection_takes_minimum(self):
        assert Multiset({A: 3, B: 1}) & Multiset({A: 2, C: 4}) == Multiset({A: 2})

    def test_scale(self):
        assert Multiset({A: 2, B: 1}) * 3 == Multiset({A: 6, B: 3})
        assert Multiset.of(A) * 0 is EMPTY
        with pytest.raises(CountUnderflowError):
            Multiset.of(A).scale(-1)

    def test_overflow_is_detected(self):
        big = Multiset({A: MAX_COUNT})
        with pytest.raises(CountOverflowError):
            big + Multiset.of(A)
        with pytest.raises(CountOverflowError):
            big.scale(2)

    def test_inclusion_order(self):
        small, large = Multiset.of(A), Multiset.of(A, B)
        assert small <= large
        assert small < large
        assert not large <= small
        assert EMPTY <= small

    def test_equal_multisets_hash_equal(self):
        assert hash(Multiset({A: 1, B: 2})) == hash(Multiset([(B, 2), (A, 1)]))


class TestMultisetLaws:
    """Algebraic properties over random small multisets."""

    @given(multisets, multisets)
    def test_sum_then_subtract_restores(self, x, y):
        assert (x + y) - y == x

    @given(multisets, multisets)
    def test_sum_is_commutative(self, x, y):
        assert x + y == y + x

    @given(multisets, multisets)
    def test_intersection_is_included_in_both(self, x, y):
        meet = x & y
        assert meet <= x and meet <= y

    @given(multisets, multisets)
    def test_weight_is_additive(self, x, y):
        assert (x + y).weight == x.weight + y.weight

    @given(multisets)
    def test_intersection_is_idempotent(self, x):
        assert x & x == x

    @given(multisets, multisets)
    def test_intersection_is_commutative(self, x, y):
        assert x & y == y & x

    @given(multisets, multisets, multisets)
    def test_sum_is_associative(self, x, y, z):
        assert (x + y) + z == x + (y + z)

    @given(multisets, multisets, multisets)
    def test_inclusion_is_a_partial_order(self, x, y, z):
        assert x <= x
        if x <= y and y <= x:
            assert x == y
        if x <= y and y <= z:
            assert x <= z
        assert x & y <= x <= x + y

    @given(multisets)
    def test_text_form_parses_back(self, x):
        assert parse_multiset(format_multiset(x)) == x


class TestMultisetText:
    """Test the `sym^k` text form."""

    def test_format_is_sorted_with_exponents(self):
        m = Multiset({C: 1, B: 3, A: 1})
        assert format_multiset(m) == "a b^3 c"
        assert str(EMPTY) == "-"

    def test_hatted_symbols_with_counts(self):
        m = parse_multiset("X0^^2 p0^ r1")
        assert m[Symbol("X0", True)] == 2
        assert m[Symbol("p0", True)] == 1
        assert m[Symbol("r1")] == 1
        assert str(m) == "X0^^2 p0^ r1"

    def test_repeated_items_add_up(self):
        assert parse_multiset("a a^2 b") == Multiset({A: 3, B: 1})

    def test_dash_is_empty(self):
        assert parse_multiset(" - ") is EMPTY
        assert parse_symbols("-") == ()
        assert parse_symbols("λ") == ()

    @pytest.mark.parametrize("text", ["", "a^0", "a^^", "a -"])
    def test_malformed_text(self, text):
        with pytest.raises(FormatError):
            parse_multiset(text)

    def test_error_column_is_absolute(self):
        with pytest.raises(FormatError) as exc_info:
            parse_multiset("a b^0", line=4, offset=10)
        assert exc_info.value.line == 4
        assert exc_info.value.column == 13


class TestStm:
    """Test the positional string-to-multiset encoding."""

    def test_weights_double_per_position(self):
        x, y = Symbol("X"), Symbol("Y")
        assert stm((x, y, x)) == Multiset({x: 5, y: 2})
        assert stm(()) == EMPTY

    @given(st.lists(st.sampled_from([A, B, C]), max_size=12))
    def test_weight_is_two_to_the_length_minus_one(self, word):
        assert stm(word).weight == 2 ** len(word) - 1

    @given(st.lists(st.sampled_from([A, B, C]), max_size=12))
    def test_unstm_inverts_stm(self, word):
        assert unstm(stm(word)) == tuple(word)

    def test_stm_is_injective_on_short_words(self):
        words = [w for n in range(7) for w in product([A, B, C], repeat=n)]
        encodings = {stm(w) for w in words}
        assert len(encodings) == len(words)

    def test_unstm_rejects_non_encodings(self):
        assert unstm({A: 2}) is None
        assert unstm({A: 3, B: 1}) is None
        assert unstm({A: 1, B: 1}) is None

    def test_sixty_five_positions_overflow(self):
        with pytest.raises(CountOverflowError):
            stm((A,) * 65)
